"""Exhaustive small-graph search: enumeration, dedup, extremal irregularity.

Graphs on n vertices are walked as edge subsets of K_n in increasing bitmask
order (edge (0,1) is the most significant bit), with degree and size pruning.
Deduplication marks the whole isomorphism orbit of each first-seen mask in a
bitmap, so the yielded representative is the minimum adjacency-matrix form of
its class; orbit images are computed from per-permutation bit tables with
numpy.  Hard limits: n <= 10 labeled, n <= 8 with dedup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .bounds import IntervalError, order_bound, piecewise_bound, smooth_bound, sparse_bound
from .graphio import serialize_graph6
from .graphs import Graph, irregularity

LABELED_LIMIT = 10
DEDUP_LIMIT = 8


class SearchLimitError(ValueError):
    """Requested search exceeds the supported vertex count."""


@dataclass(frozen=True)
class SearchConstraints:
    """Family selector: order n, optional size, degree cap and floor."""

    n: int
    m: int | None = None
    delta: int | None = None
    delta_min: int | None = None
    dedup: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got n={self.n}")
        if self.n > LABELED_LIMIT:
            raise SearchLimitError(f"labeled search is capped at n <= {LABELED_LIMIT}")
        if self.dedup and self.n > DEDUP_LIMIT:
            raise SearchLimitError(f"dedup search is capped at n <= {DEDUP_LIMIT}")
        nmax = self.n * (self.n - 1) // 2
        if self.m is not None and not 0 <= self.m <= nmax:
            raise ValueError(f"need 0 <= m <= {nmax}, got m={self.m}")
        if self.delta is not None and self.delta < 0:
            raise ValueError(f"need delta >= 0, got {self.delta}")
        if self.delta_min is not None and self.delta_min < 0:
            raise ValueError(f"need delta_min >= 0, got {self.delta_min}")
        if self.delta is not None and self.delta_min is not None \
                and self.delta_min > self.delta:
            raise ValueError(
                f"need delta_min <= delta, got {self.delta_min} > {self.delta}")
        if self.m is not None and self.delta is not None \
                and 2 * self.m > self.delta * self.n:
            raise ValueError(
                f"inconsistent constraints: 2m = {2 * self.m} > delta*n = {self.delta * self.n}")
        if self.m is not None and self.delta_min is not None \
                and self.delta_min * self.n > 2 * self.m:
            raise ValueError(
                f"inconsistent constraints: delta_min*n = {self.delta_min * self.n} "
                f"> 2m = {2 * self.m}")
        if self.delta_min is not None and self.delta_min > self.n - 1:
            raise ValueError(
                f"inconsistent constraints: delta_min = {self.delta_min} > n - 1 = {self.n - 1}")


def _lex_edges(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@lru_cache(maxsize=None)
def _orbit_tables(n: int):
    """(n_perms, n_edges) int64 array: bit value of each edge's image per permutation."""
    edges = _lex_edges(n)
    ne = len(edges)
    index = {e: k for k, e in enumerate(edges)}
    perms = list(itertools.permutations(range(n)))
    target = np.empty((len(perms), max(ne, 1)), dtype=np.int64)
    for pi, p in enumerate(perms):
        for k, (u, v) in enumerate(edges):
            a, b = p[u], p[v]
            if a > b:
                a, b = b, a
            target[pi, k] = ne - 1 - index[(a, b)]
    return np.left_shift(np.int64(1), target)


def _mask_edges(mask: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    ne = len(edges)
    return [edges[k] for k in range(ne) if mask >> (ne - 1 - k) & 1]


def _orbit_images(mask: int, n: int) -> np.ndarray:
    tables = _orbit_tables(n)
    ne = n * (n - 1) // 2
    cols = [k for k in range(ne) if mask >> (ne - 1 - k) & 1]
    if not cols:
        return np.zeros(1, dtype=np.int64)
    return np.bitwise_or.reduce(tables[:, cols], axis=1)


def canonical_form(g: Graph) -> int:
    """Minimum edge-bitmask (adjacency upper triangle, row-major) over relabelings."""
    if g.n > DEDUP_LIMIT:
        raise SearchLimitError(f"canonical form is capped at n <= {DEDUP_LIMIT}")
    edges = _lex_edges(g.n)
    ne = len(edges)
    index = {e: k for k, e in enumerate(edges)}
    mask = 0
    for e in g.edges:
        mask |= 1 << (ne - 1 - index[e])
    return int(_orbit_images(mask, g.n).min())


def _mask_stream(n: int, m: int | None, delta: int | None,
                 delta_min: int | None) -> Iterator[int]:
    """All constraint-satisfying edge subsets of K_n, as increasing bitmasks."""
    edges = _lex_edges(n)
    ne = len(edges)
    unconstrained = (m is None and (delta is None or delta >= n - 1)
                     and not delta_min)
    if unconstrained:
        yield from range(1 << ne)
        return
    cap = delta if delta is not None else n
    floor = delta_min or 0
    # upcoming[k][v] = edges with index >= k incident to v (for floor pruning)
    upcoming = None
    if floor:
        upcoming = [[0] * n for _ in range(ne + 1)]
        for k in range(ne - 1, -1, -1):
            u, v = edges[k]
            row = upcoming[k + 1][:]
            row[u] += 1
            row[v] += 1
            upcoming[k] = row
    deg = [0] * n
    mask = 0
    included = 0
    stack: list[tuple[int, int]] = [(0, 0)]
    while stack:
        k, stage = stack.pop()
        if stage == 0:
            if m is not None and (included > m or included + (ne - k) < m):
                continue
            if floor:
                rem = upcoming[k]
                if any(deg[v] + rem[v] < floor for v in range(n)):
                    continue
            if k == ne:
                yield mask
                continue
            stack.append((k, 1))
            stack.append((k + 1, 0))
        elif stage == 1:
            u, v = edges[k]
            if deg[u] < cap and deg[v] < cap and (m is None or included < m):
                mask |= 1 << (ne - 1 - k)
                deg[u] += 1
                deg[v] += 1
                included += 1
                stack.append((k, 2))
                stack.append((k + 1, 0))
        else:
            u, v = edges[k]
            mask &= ~(1 << (ne - 1 - k))
            deg[u] -= 1
            deg[v] -= 1
            included -= 1


def enumerate_graphs(constraints: SearchConstraints) -> Iterator[Graph]:
    """Yield the family (labeled graphs, or one minimum representative per class)."""
    n = constraints.n
    edges = _lex_edges(n)
    ne = len(edges)
    stream = _mask_stream(n, constraints.m, constraints.delta, constraints.delta_min)
    if not constraints.dedup:
        for mask in stream:
            yield Graph(n, frozenset(_mask_edges(mask, edges)))
        return
    seen = np.zeros(((1 << ne) + 7) // 8, dtype=np.uint8)
    for mask in stream:
        if seen[mask >> 3] >> (mask & 7) & 1:
            continue
        yield Graph(n, frozenset(_mask_edges(mask, edges)))
        imgs = _orbit_images(mask, n)
        np.bitwise_or.at(seen, imgs >> 3,
                         np.left_shift(np.uint8(1), (imgs & 7).astype(np.uint8)))


@dataclass
class MaxIrrResult:
    """Extremal irregularity over a family; empty=True when no graph matches."""

    empty: bool
    value: int | None = None
    witness: Graph | None = None
    searched: int = 0


def max_irr(constraints: SearchConstraints) -> MaxIrrResult:
    """Maximum irregularity and its first witness in enumeration order."""
    if constraints.m is None:
        raise ValueError("max_irr requires a fixed edge count m")
    best: int | None = None
    witness: Graph | None = None
    searched = 0
    for g in enumerate_graphs(constraints):
        searched += 1
        value = irregularity(g)
        if best is None or value > best:
            best, witness = value, g
    if best is None:
        return MaxIrrResult(empty=True, searched=0)
    return MaxIrrResult(empty=False, value=best, witness=witness, searched=searched)


@dataclass(frozen=True, slots=True)
class ExhaustiveRow:
    n: int
    m: int
    bound: str
    bound_value: Fraction
    max_irr: int
    gap: Fraction
    witness: str  # graph6 of the max-irregularity class
    equality_witnesses: tuple[str, ...]

    @property
    def violated(self) -> bool:
        return self.gap < 0


@dataclass
class ExhaustiveReport:
    delta: int
    delta_min: int | None
    rows: list[ExhaustiveRow]
    class_counts: dict[int, int]  # n -> isomorphism classes scanned

    @property
    def violations(self) -> list[ExhaustiveRow]:
        return [r for r in self.rows if r.violated]

    def worst_gap(self, bound: str) -> Fraction | None:
        gaps = [r.gap for r in self.rows if r.bound == bound]
        return max(gaps) if gaps else None

    def to_csv(self) -> str:
        lines = ["n,m,bound,bound_value,max_irr,gap,witness"]
        lines.extend(
            f"{r.n},{r.m},{r.bound},{r.bound_value},{r.max_irr},{r.gap},{r.witness}"
            for r in self.rows)
        return "\n".join(lines) + "\n"


def verify_exhaustive(n_max: int, delta: int,
                      delta_min: int | None = None) -> ExhaustiveReport:
    """Check every closed-form bound against every class with n <= n_max.

    Scans all isomorphism classes with max degree <= delta (and min degree
    >= delta_min when given), grouping by (n, m); each row records the bound
    value, the extremal irregularity, the gap, the extremal witness and all
    classes attaining equality.  Any negative gap is a violation.
    """
    if not 1 <= n_max <= DEDUP_LIMIT:
        raise SearchLimitError(f"need 1 <= n_max <= {DEDUP_LIMIT}, got {n_max}")
    if delta < 1:
        raise ValueError(f"need delta >= 1, got {delta}")
    rows: list[ExhaustiveRow] = []
    class_counts: dict[int, int] = {}
    for n in range(1, n_max + 1):
        floor = delta_min
        if floor is not None and floor > n - 1:
            class_counts[n] = 0
            continue
        constraints = SearchConstraints(
            n=n, delta=delta, delta_min=floor, dedup=True)
        by_m: dict[int, list[tuple[int, Graph]]] = {}
        count = 0
        for g in enumerate_graphs(constraints):
            count += 1
            by_m.setdefault(g.m, []).append((irregularity(g), g))
        class_counts[n] = count
        for m in sorted(by_m):
            family = by_m[m]
            bounds_here: list[tuple[str, Fraction]] = [
                ("thm1", piecewise_bound(n, m, delta)),
                ("cor1", smooth_bound(n, m, delta)),
            ]
            if delta_min is not None and delta_min < delta:
                bounds_here.append(("prop1", order_bound(n, delta, delta_min)))
                if delta_min >= 1:
                    try:
                        bounds_here.append(
                            ("prop2", sparse_bound(n, m, delta, delta_min)))
                    except IntervalError:
                        pass
            peak = max(value for value, _ in family)
            witness = next(g for value, g in family if value == peak)
            for name, bound_value in bounds_here:
                equal = tuple(serialize_graph6(g) for value, g in family
                              if value == bound_value)
                rows.append(ExhaustiveRow(
                    n=n, m=m, bound=name, bound_value=bound_value,
                    max_irr=peak, gap=bound_value - peak,
                    witness=serialize_graph6(witness), equality_witnesses=equal))
    return ExhaustiveReport(delta=delta, delta_min=delta_min, rows=rows,
                            class_counts=class_counts)


__all__ = [
    "LABELED_LIMIT",
    "DEDUP_LIMIT",
    "SearchLimitError",
    "SearchConstraints",
    "enumerate_graphs",
    "canonical_form",
    "MaxIrrResult",
    "max_irr",
    "ExhaustiveRow",
    "ExhaustiveReport",
    "verify_exhaustive",
]
