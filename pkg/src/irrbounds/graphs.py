"""Simple undirected graphs and their degree-based irregularity.

The irregularity of a graph G is sum(|deg(u) - deg(v)|) over the edges uv.
Everything here is exact integer arithmetic on small dense-free structures;
graphs are immutable, edges are stored as sorted pairs u < v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Invalid graph construction or graph operation."""


def _check_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if not (isinstance(u, int) and isinstance(v, int)):
        raise GraphError(f"edge endpoints must be integers, got ({u!r}, {v!r})")
    if u == v:
        raise GraphError(f"self-loop at vertex {u} is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if _check_edge(u, v, self.n) != (u, v):
                raise GraphError(f"edge ({u}, {v}) is not stored as a sorted pair")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge order and rejecting duplicates."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            e = _check_edge(u, v, n)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, u: int) -> list[int]:
        out = [v for x, v in self.edges if x == u] + [x for x, v in self.edges if v == u]
        return sorted(out)


def irregularity(g: Graph) -> int:
    """Sum of |deg(u) - deg(v)| over all edges uv of g."""
    deg = g.degrees()
    return sum(abs(deg[u] - deg[v]) for u, v in g.edges)


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex and edge counts of a graph, bucketed by degree.

    n_counts[i] is the number of vertices of degree i (0 <= i <= delta_cap);
    m_counts[(i, j)] with i <= j is the number of edges whose endpoint degrees
    are i and j.  Zero counts are dropped.  The degree-incidence identity
    2*m[i,i] + sum_{j<i} m[j,i] + sum_{j>i} m[i,j] = i * n[i] must hold for
    every positive degree i, which also forces the handshake identity.
    """

    delta_cap: int
    n_counts: Mapping[int, int]
    m_counts: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        if self.delta_cap < 1:
            raise GraphError(f"delta_cap must be >= 1, got {self.delta_cap}")
        object.__setattr__(self, "n_counts", dict(sorted(
            (i, c) for i, c in self.n_counts.items() if c != 0)))
        object.__setattr__(self, "m_counts", dict(sorted(
            (e, c) for e, c in self.m_counts.items() if c != 0)))
        for i, c in self.n_counts.items():
            if not 0 <= i <= self.delta_cap:
                raise GraphError(f"degree {i} outside [0, {self.delta_cap}]")
            if c < 0:
                raise GraphError(f"negative vertex count for degree {i}")
        for (i, j), c in self.m_counts.items():
            if not (1 <= i <= j <= self.delta_cap):
                raise GraphError(f"edge bucket ({i}, {j}) outside 1 <= i <= j <= {self.delta_cap}")
            if c < 0:
                raise GraphError(f"negative edge count for bucket ({i}, {j})")
        for i in range(1, self.delta_cap + 1):
            incident = 2 * self.m_counts.get((i, i), 0)
            incident += sum(c for (a, b), c in self.m_counts.items() if a == i and b != i)
            incident += sum(c for (a, b), c in self.m_counts.items() if b == i and a != i)
            if incident != i * self.n_counts.get(i, 0):
                raise GraphError(
                    f"degree-incidence identity fails at degree {i}: "
                    f"{incident} edge endpoints vs {i} * {self.n_counts.get(i, 0)} vertices")

    @property
    def n(self) -> int:
        return sum(self.n_counts.values())

    @property
    def m(self) -> int:
        return sum(self.m_counts.values())

    def vertex_count(self, i: int) -> int:
        return self.n_counts.get(i, 0)

    def edge_count(self, i: int, j: int) -> int:
        return self.m_counts.get((min(i, j), max(i, j)), 0)

    def weighted_difference(self) -> int:
        """sum (j - i) * m_counts[(i, j)]; equals the irregularity of any source graph."""
        return sum((j - i) * c for (i, j), c in self.m_counts.items())


def degree_profile(g: Graph, delta_cap: int) -> DegreeProfile:
    """Profile of g against a degree cap; errors if some degree exceeds the cap."""
    deg = g.degrees()
    if deg and max(deg) > delta_cap:
        raise GraphError(f"graph has max degree {max(deg)} above the cap {delta_cap}")
    n_counts: dict[int, int] = {}
    for d in deg:
        n_counts[d] = n_counts.get(d, 0) + 1
    m_counts: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        i, j = sorted((deg[u], deg[v]))
        m_counts[(i, j)] = m_counts.get((i, j), 0) + 1
    return DegreeProfile(delta_cap, n_counts, m_counts)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: sides {0..a-1} and {a..a+b-1}, all cross edges."""
    if a < 0 or b < 0:
        raise GraphError("side sizes must be non-negative")
    return Graph(a + b, frozenset((u, a + v) for u in range(a) for v in range(b)))


def split_graph(p: int, n: int) -> Graph:
    """Clique on {0..p-1} joined completely to the independent set {p..n-1}."""
    if not 0 <= p <= n:
        raise GraphError(f"need 0 <= p <= n, got p={p}, n={n}")
    edges = [(u, v) for u in range(p) for v in range(u + 1, p)]
    edges += [(u, v) for u in range(p) for v in range(p, n)]
    return Graph(n, frozenset(edges))


def regular_graph(k: int, n: int) -> Graph:
    """A k-regular circulant on n vertices; k*n must be even and k < n.

    Connects each vertex to offsets 1..k//2 in both directions; odd k adds
    the antipodal matching (possible since odd k forces even n).
    """
    if not 0 <= k < n:
        raise GraphError(f"need 0 <= k < n, got k={k}, n={n}")
    if k * n % 2 != 0:
        raise GraphError(f"no {k}-regular graph on {n} vertices (parity)")
    edges: set[tuple[int, int]] = set()
    for s in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + s) % n
            edges.add((min(u, v), max(u, v)))
    if k % 2 == 1:
        half = n // 2
        for u in range(half):
            edges.add((u, u + half))
    return Graph(n, frozenset(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted up by g1.n."""
    shift = g1.n
    edges = set(g1.edges)
    edges.update((u + shift, v + shift) for u, v in g2.edges)
    return Graph(g1.n + g2.n, frozenset(edges))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def _bridges(g: Graph) -> set[tuple[int, int]]:
    """Bridge edges of g (iterative lowpoint DFS)."""
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    # back edge; simple graphs have a single parent edge to skip
                    low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.add((min(p, u), max(p, u)))
    return out


def connectify(g: Graph) -> Graph:
    """Connect a disconnected graph by degree-preserving edge swaps.

    Requires >= 2 components, each containing at least one edge.  Repeatedly
    picks the first component pair (by index) and the lexicographically first
    edge pair whose swap uv, u'v' -> uv', u'v strictly reduces the component
    count; a swap does so exactly when the removed edges are not both bridges.
    Raises GraphError when no such swap exists (e.g. every component a tree).
    """
    comps = components(g)
    if len(comps) < 2:
        raise GraphError("graph is already connected")
    current = g
    while True:
        comps = components(current)
        if len(comps) <= 1:
            return current
        comp_of = {}
        for idx, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = idx
        edges_by_comp: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(comps))}
        for e in current.sorted_edges():
            edges_by_comp[comp_of[e[0]]].append(e)
        for idx, comp in enumerate(comps):
            if not edges_by_comp[idx]:
                raise GraphError(f"component {comp} has no edge")
        bridges = _bridges(current)
        swap = None
        for a in range(len(comps)):
            for b in range(a + 1, len(comps)):
                for e1 in edges_by_comp[a]:
                    for e2 in edges_by_comp[b]:
                        if e1 in bridges and e2 in bridges:
                            continue
                        swap = (e1, e2)
                        break
                    if swap:
                        break
                if swap:
                    break
            if swap:
                break
        if swap is None:
            raise GraphError("no degree-preserving swap can reduce the component count")
        (u, v), (x, y) = swap
        new_edges = set(current.edges)
        new_edges.discard((u, v))
        new_edges.discard((x, y))
        # cross-component endpoints, so neither replacement can already exist
        for e in ((u, y), (x, v)):
            e = (min(e), max(e))
            if e in new_edges:
                raise GraphError(f"swap would duplicate edge {e}")
            new_edges.add(e)
        current = Graph(current.n, frozenset(new_edges))


__all__ = [
    "Graph",
    "GraphError",
    "DegreeProfile",
    "irregularity",
    "degree_profile",
    "complete_bipartite",
    "split_graph",
    "regular_graph",
    "disjoint_union",
    "components",
    "is_connected",
    "connectify",
]
