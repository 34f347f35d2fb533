"""Closed-form upper bounds on graph irregularity, all exact.

Inputs are the order n, size m, a max-degree cap D (delta) and optionally a
min-degree floor d (delta_min).  Bounds returning Fraction are exact; the two
square-root reference bounds (zhou_luo_1/2) are float-valued and meant for
curve comparison only.  The cap decision smooth_cap_holds is made in integer
arithmetic, never through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class InfeasibleParamsError(ValueError):
    """Parameter combination admits no graph (or violates a precondition)."""


class IntervalError(InfeasibleParamsError):
    """Average degree falls outside the bound's admissible interval."""


@dataclass(frozen=True)
class BoundParams:
    """Validated (n, m, delta, delta_min) tuple.

    Feasibility: n >= 1, D >= 1, 0 <= m <= D*n/2, and when a min-degree floor
    is present 0 <= d < D together with the handshake floor d*n <= 2m.
    """

    n: int
    m: int
    delta: int
    delta_min: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InfeasibleParamsError(f"need n >= 1, got n={self.n}")
        if self.delta < 1:
            raise InfeasibleParamsError(f"need delta >= 1, got delta={self.delta}")
        if self.m < 0 or 2 * self.m > self.delta * self.n:
            raise InfeasibleParamsError(
                f"need 0 <= m <= delta*n/2 = {Fraction(self.delta * self.n, 2)}, got m={self.m}")
        if self.delta_min is not None:
            if not 0 <= self.delta_min < self.delta:
                raise InfeasibleParamsError(
                    f"need 0 <= delta_min < delta, got delta_min={self.delta_min}, delta={self.delta}")
            if self.delta_min * self.n > 2 * self.m:
                raise InfeasibleParamsError(
                    f"min degree {self.delta_min} needs 2m >= delta_min*n = "
                    f"{self.delta_min * self.n}, got 2m={2 * self.m}")


def piece_index(n: int, m: int, delta: int) -> int:
    """Index d of the affine piece covering average degree 2m/n.

    d = floor(delta*m / (delta*n - m)), clamped to delta - 1 so the top piece
    absorbs the right endpoint 2m/n = delta.
    """
    BoundParams(n, m, delta)
    raw = delta * m // (delta * n - m)
    return min(raw, delta - 1)


def piece_interval(delta: int, d: int) -> tuple[Fraction, Fraction]:
    """Average-degree interval [2Dd/(D+d), 2D(d+1)/(D+d+1)] of piece d."""
    if not 0 <= d < delta:
        raise InfeasibleParamsError(f"need 0 <= d < delta, got d={d}, delta={delta}")
    return (Fraction(2 * delta * d, delta + d), Fraction(2 * delta * (d + 1), delta + d + 1))


def piecewise_bound_at(n: int, m: int, delta: int, d: int) -> Fraction:
    """Value d(d+1)n + (D^2 - (2d+1)D - d^2 - d)m/D of piece d, any 0 <= d < D."""
    if not 0 <= d < delta:
        raise InfeasibleParamsError(f"need 0 <= d < delta, got d={d}, delta={delta}")
    return d * (d + 1) * n + Fraction(
        (delta * delta - (2 * d + 1) * delta - d * d - d) * m, delta)


def piecewise_bound(n: int, m: int, delta: int) -> Fraction:
    """Piecewise-affine irregularity bound for graphs with max degree <= delta.

    Tight on complete bipartite graphs K_{delta,d} and their mixtures; the
    piece is selected by piece_index.
    """
    return piecewise_bound_at(n, m, delta, piece_index(n, m, delta))


def smooth_bound(n: int, m: int, delta: int) -> Fraction:
    """Smooth irregularity bound (Dn - 2m) * Dm / (Dn - m), exact rational."""
    BoundParams(n, m, delta)
    return Fraction((delta * n - 2 * m) * delta * m, delta * n - m)


@dataclass(frozen=True)
class CapCheck:
    """Outcome of comparing smooth_bound against the cap (3 - 2*sqrt(2)) D^2 n."""

    holds: bool
    bound: Fraction
    cap: float


def smooth_cap_holds(n: int, m: int, delta: int) -> CapCheck:
    """Decide smooth_bound < (3 - 2*sqrt(2)) * delta^2 * n in integer arithmetic.

    With B = p/q and K = delta^2 * n the strict comparison B < (3 - 2*sqrt(2))K
    is equivalent to A = 3qK - p > 0 and A^2 > 8 (qK)^2.  The cap is irrational
    for K > 0, so ties are impossible and the inequality is always strict.
    """
    b = smooth_bound(n, m, delta)
    p, q = b.numerator, b.denominator
    k = delta * delta * n
    a = 3 * q * k - p
    holds = a > 0 and a * a > 8 * (q * k) ** 2
    return CapCheck(holds, b, (3 - 2 * math.sqrt(2)) * k)


def side_rate(delta: int, i: int) -> Fraction:
    """Per-vertex irregularity D(D - i)i / (D + i) of the complete bipartite K_{D,i}."""
    if delta < 1 or not 0 <= i <= delta:
        raise InfeasibleParamsError(f"need 0 <= i <= delta, delta >= 1, got i={i}, delta={delta}")
    return Fraction(delta * (delta - i) * i, delta + i)


def sqrt2_bracket(delta: int) -> tuple[int, int]:
    """(floor, ceil) of (sqrt(2) - 1) * delta, exact via isqrt; never a tie."""
    if delta < 1:
        raise InfeasibleParamsError(f"need delta >= 1, got {delta}")
    lo = math.isqrt(2 * delta * delta) - delta
    return lo, lo + 1


def best_side(delta: int, delta_min: int) -> int:
    """Smallest i in [delta_min, delta] maximizing side_rate(delta, i).

    side_rate is strictly unimodal in i (its derivative numerator
    D^2 - 2Dx - x^2 has a single positive root (sqrt(2) - 1) D), so the
    predicate side_rate(i) >= side_rate(i+1) is false before the smallest
    argmax and true from it on; binary search finds that first index.
    """
    if not 0 <= delta_min < delta:
        raise InfeasibleParamsError(
            f"need 0 <= delta_min < delta, got delta_min={delta_min}, delta={delta}")
    lo, hi = delta_min, delta - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if side_rate(delta, mid) >= side_rate(delta, mid + 1):
            hi = mid
        else:
            lo = mid + 1
    return lo


def order_bound(n: int, delta: int, delta_min: int) -> Fraction:
    """Size-free bound n * max_i D(D - i)i/(D + i) over i in [delta_min, delta]."""
    if n < 1:
        raise InfeasibleParamsError(f"need n >= 1, got n={n}")
    return n * side_rate(delta, best_side(delta, delta_min))


def sparse_interval(delta: int, delta_min: int) -> tuple[Fraction, Fraction]:
    """Admissible average-degree interval [d, 2Dd/(D+d)] of the sparse bound."""
    if not 1 <= delta_min < delta:
        raise InfeasibleParamsError(
            f"need 1 <= delta_min < delta, got delta_min={delta_min}, delta={delta}")
    return (Fraction(delta_min), Fraction(2 * delta * delta_min, delta + delta_min))


def sparse_bound(n: int, m: int, delta: int, delta_min: int) -> Fraction:
    """Sparse-regime bound 2Dm - dDn, valid for average degree in sparse_interval."""
    BoundParams(n, m, delta, delta_min)
    lo, hi = sparse_interval(delta, delta_min)
    avg = Fraction(2 * m, n)
    if not lo <= avg <= hi:
        raise IntervalError(
            f"average degree 2m/n = {avg} outside the admissible interval [{lo}, {hi}]")
    return Fraction(2 * delta * m - delta_min * delta * n)


def albertson_cap(n: int) -> Fraction:
    """Order-only irregularity cap 4 n^3 / 27."""
    if n < 0:
        raise InfeasibleParamsError(f"need n >= 0, got n={n}")
    return Fraction(4 * n ** 3, 27)


def zhou_luo_1(n: int, m: int, delta: int, delta_min: int) -> float:
    """Reference bound m * sqrt(2n(2m + (n-1)(D - d))/(n + D - d) - 4m), float."""
    _check_reference_params(n, m, delta, delta_min)
    radicand = Fraction(2 * n * (2 * m + (n - 1) * (delta - delta_min)),
                        n + delta - delta_min) - 4 * m
    if radicand < 0:
        raise InfeasibleParamsError(f"negative radicand {radicand} (m too large for this form)")
    return m * math.sqrt(radicand)


def zhou_luo_2(n: int, m: int, delta: int, delta_min: int) -> float:
    """Reference bound sqrt(m(2mn(D + d) - n^2 D d - 4m^2)), float."""
    _check_reference_params(n, m, delta, delta_min)
    radicand = m * (2 * m * n * (delta + delta_min) - n * n * delta * delta_min - 4 * m * m)
    if radicand < 0:
        raise InfeasibleParamsError(f"negative radicand {radicand} (parameters admit no graph here)")
    return math.sqrt(radicand)


def _check_reference_params(n: int, m: int, delta: int, delta_min: int) -> None:
    if n < 1 or m < 0 or delta < 1 or not 0 <= delta_min <= delta:
        raise InfeasibleParamsError(
            f"need n >= 1, m >= 0, 1 <= delta, 0 <= delta_min <= delta; "
            f"got n={n}, m={m}, delta={delta}, delta_min={delta_min}")


__all__ = [
    "BoundParams",
    "CapCheck",
    "InfeasibleParamsError",
    "IntervalError",
    "piece_index",
    "piece_interval",
    "piecewise_bound",
    "piecewise_bound_at",
    "smooth_bound",
    "smooth_cap_holds",
    "side_rate",
    "sqrt2_bracket",
    "best_side",
    "order_bound",
    "sparse_bound",
    "sparse_interval",
    "albertson_cap",
    "zhou_luo_1",
    "zhou_luo_2",
]
