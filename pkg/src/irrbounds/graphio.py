"""Parsers and writers for two graph exchange formats.

Edge list: first line is the vertex count n, each following line "u v" is an
edge with 0-based endpoints, LF line endings.  graph6: the standard one-line
ASCII encoding for graphs with n <= 62 (single size byte n+63, then the upper
triangle of the adjacency matrix read column by column, packed into 6-bit
groups, each group + 63).
"""

from __future__ import annotations

from .graphs import Graph, GraphError

FORMATS = ("edgelist", "graph6")


class GraphParseError(ValueError):
    """Malformed graph text; the message carries a line or byte position."""


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    rows = [(k + 1, line.strip()) for k, line in enumerate(lines) if line.strip()]
    if not rows:
        raise GraphParseError("line 1: missing vertex count")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphParseError(f"line {lineno}: vertex count must be an integer, got {head!r}") from None
    if n < 0:
        raise GraphParseError(f"line {lineno}: vertex count must be non-negative, got {n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: endpoints must be integers, got {row!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: edge ({u}, {v}) out of range for {n} vertices")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# graph6 packs the bits x(0,1), x(0,2), x(1,2), x(0,3), ... i.e. column j
# lists its rows i < j before column j+1 starts.
def _g6_bit_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("byte 1: empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:
        raise GraphParseError("byte 1: multi-byte sizes (n > 62) are not supported")
    if not 63 <= c0 <= 125:
        raise GraphParseError(f"byte 1: invalid size byte {s[0]!r}")
    n = c0 - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise GraphParseError(
            f"byte {len(s) + 1}: expected {need} data bytes for n={n}, got {len(s) - 1}")
    bits: list[int] = []
    for k, ch in enumerate(s[1:], start=2):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphParseError(f"byte {k}: invalid data byte {ch!r}")
        val = c - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphParseError(f"byte {len(s)}: nonzero padding bits")
    order = _g6_bit_order(n)
    edges = [order[k] for k in range(nbits) if bits[k]]
    return Graph.from_edges(n, edges)


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 output supports at most 62 vertices, got {g.n}")
    bits = [0] * (g.n * (g.n - 1) // 2)
    index = {e: k for k, e in enumerate(_g6_bit_order(g.n))}
    for e in g.edges:
        bits[index[e]] = 1
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6] + [0] * (6 - len(bits[k:k + 6]))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Parse text in the named format ("edgelist" or "graph6")."""
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise GraphParseError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return serialize_edge_list(g)
    if fmt == "graph6":
        return serialize_graph6(g)
    raise GraphParseError(f"unknown graph format {fmt!r}")


__all__ = [
    "FORMATS",
    "GraphParseError",
    "parse_edge_list",
    "serialize_edge_list",
    "parse_graph6",
    "serialize_graph6",
    "parse_graph",
    "serialize_graph",
]
