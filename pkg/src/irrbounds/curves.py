"""Bound-comparison curves over the full edge-count range, CSV output."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import piecewise_bound, smooth_bound, zhou_luo_1, zhou_luo_2


@dataclass(frozen=True, slots=True)
class CurvePoint:
    """Row of the comparison table at a fixed edge count m."""

    m: int
    thm1: Fraction
    cor1: Fraction
    eb2: float
    eb3: float


def curve_points(n: int, delta: int, delta_min: int = 0) -> list[CurvePoint]:
    """One point per integer m in [0, floor(delta*n/2)].

    thm1/cor1 are exact; eb2/eb3 are the float reference bounds evaluated
    with the given min-degree floor (0 reproduces the standard comparison).
    thm1 <= cor1 is asserted at every point; a failure would be a bug.
    """
    points = []
    for m in range(delta * n // 2 + 1):
        t = piecewise_bound(n, m, delta)
        c = smooth_bound(n, m, delta)
        if t > c:
            raise RuntimeError(f"piecewise bound {t} exceeds smooth bound {c} at m={m}")
        points.append(CurvePoint(
            m=m, thm1=t, cor1=c,
            eb2=zhou_luo_1(n, m, delta, delta_min),
            eb3=zhou_luo_2(n, m, delta, delta_min)))
    return points


def format_fraction(q: Fraction) -> str:
    """'p/q', or plain 'p' for integers."""
    return str(q)


def curves_csv(n: int, delta: int, delta_min: int = 0) -> str:
    """Deterministic CSV: header m,thm1,cor1,eb2,eb3; rationals exact, floats 6dp."""
    lines = ["m,thm1,cor1,eb2,eb3"]
    for p in curve_points(n, delta, delta_min):
        lines.append(f"{p.m},{format_fraction(p.thm1)},{format_fraction(p.cor1)},"
                     f"{p.eb2:.6f},{p.eb3:.6f}")
    return "\n".join(lines) + "\n"


__all__ = ["CurvePoint", "curve_points", "curves_csv", "format_fraction"]
