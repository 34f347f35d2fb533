from __future__ import annotations

import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from irrbounds.bounds import (
    BoundParams,
    InfeasibleParamsError,
    IntervalError,
    albertson_cap,
    best_side,
    order_bound,
    piece_index,
    piece_interval,
    piecewise_bound,
    piecewise_bound_at,
    side_rate,
    smooth_bound,
    smooth_cap_holds,
    sparse_bound,
    sparse_interval,
    sqrt2_bracket,
    zhou_luo_1,
    zhou_luo_2,
)


def test_params_validation():
    BoundParams(1, 0, 1)
    BoundParams(4, 6, 3)
    with pytest.raises(InfeasibleParamsError):
        BoundParams(0, 0, 1)
    with pytest.raises(InfeasibleParamsError):
        BoundParams(4, 7, 3)  # m > delta*n/2
    with pytest.raises(InfeasibleParamsError):
        BoundParams(4, -1, 3)
    with pytest.raises(InfeasibleParamsError):
        BoundParams(4, 6, 0)
    with pytest.raises(InfeasibleParamsError):
        BoundParams(4, 6, 3, 3)  # delta_min must stay below delta
    with pytest.raises(InfeasibleParamsError):
        BoundParams(4, 1, 3, 1)  # 2m < delta_min * n


def test_piece_index_frozen_values():
    assert piece_index(14, 40, 10) == 4
    assert piece_index(5, 6, 3) == 2
    assert piece_index(4, 6, 3) == 2  # raw value 3 clamps to delta - 1
    assert piece_index(60, 45, 3) == 1
    assert piece_index(7, 0, 3) == 0


def test_piece_interval_covers_chosen_piece():
    for delta in range(1, 7):
        for n in range(1, 15):
            for m in range(0, delta * n // 2 + 1):
                d = piece_index(n, m, delta)
                lo, hi = piece_interval(delta, d)
                assert lo <= Fraction(2 * m, n) <= hi
    with pytest.raises(InfeasibleParamsError):
        piece_interval(3, 3)


def test_piecewise_bound_frozen_values():
    assert piecewise_bound(14, 40, 10) == 240
    assert piecewise_bound(5, 6, 3) == 6
    assert piecewise_bound(4, 6, 3) == 0
    assert piecewise_bound(60, 45, 3) == 90
    assert piecewise_bound(7, 0, 3) == 0
    assert piecewise_bound(4, 3, 3) == 6  # star is extremal


def test_piecewise_bound_is_min_over_pieces():
    for delta in range(1, 7):
        for n in range(1, 15):
            for m in range(0, delta * n // 2 + 1):
                env = min(piecewise_bound_at(n, m, delta, d) for d in range(delta))
                assert env == piecewise_bound(n, m, delta)


def test_adjacent_pieces_agree_at_breakpoints():
    # at average degree 2*delta*(d+1)/(delta+d+1) both lines give one value
    for delta in range(2, 9):
        for d in range(0, delta - 1):
            n = delta + d + 1
            m = (d + 1) * delta
            assert Fraction(2 * m, n) == piece_interval(delta, d)[1]
            assert piecewise_bound_at(n, m, delta, d) == piecewise_bound_at(n, m, delta, d + 1)


def test_smooth_bound_frozen_values():
    assert smooth_bound(14, 40, 10) == 240
    assert smooth_bound(60, 45, 3) == 90
    assert smooth_bound(4, 6, 3) == 0
    assert smooth_bound(5, 6, 3) == Fraction((15 - 12) * 18, 15 - 6)


def test_piecewise_never_exceeds_smooth():
    for delta in range(1, 9):
        for n in range(1, 25):
            for m in range(0, delta * n // 2 + 1):
                ratio_integral = (delta * m) % (delta * n - m) == 0
                p, s = piecewise_bound(n, m, delta), smooth_bound(n, m, delta)
                assert p <= s
                assert (p == s) == ratio_integral


def test_smooth_cap_decision_matches_high_precision_arithmetic():
    getcontext().prec = 50
    root2 = Decimal(2).sqrt()
    for delta in range(1, 9):
        for n in range(1, 21):
            for m in range(1, delta * n // 2 + 1):
                check = smooth_cap_holds(n, m, delta)
                cap = (3 - 2 * root2) * delta * delta * n
                lhs = Decimal(check.bound.numerator) / Decimal(check.bound.denominator)
                assert check.holds == (lhs < cap)
                assert check.bound == smooth_bound(n, m, delta)
                assert check.cap == pytest.approx(float(cap))


def test_side_rate_and_best_side():
    assert side_rate(10, 4) == Fraction(120, 7)
    assert side_rate(10, 0) == 0
    assert side_rate(10, 10) == 0
    assert best_side(10, 0) == 4
    assert best_side(3, 1) == 1
    assert best_side(10, 7) == 7
    assert best_side(1, 0) == 0
    assert best_side(2, 0) == 1
    with pytest.raises(InfeasibleParamsError):
        best_side(3, 4)


def test_best_side_matches_linear_scan():
    # exact argmax with smallest-index tie break, checked exhaustively
    for delta in range(1, 260):
        for delta_min in range(0, delta):
            best = max(range(delta_min, delta + 1),
                       key=lambda i: (side_rate(delta, i), -i))
            assert best_side(delta, delta_min) == best


def test_sqrt2_bracket_contains_best_side():
    for delta in range(1, 2001):
        lo, hi = sqrt2_bracket(delta)
        assert hi == lo + 1
        # lo = floor((sqrt(2) - 1) * delta) by exact integer square root
        assert (lo + delta) ** 2 <= 2 * delta * delta < (lo + delta + 1) ** 2
        assert best_side(delta, 0) in (lo, hi)


def test_order_bound_values():
    assert order_bound(5, 10, 0) == Fraction(600, 7)
    assert order_bound(3, 2, 1) == 2
    assert order_bound(1, 1, 0) == 0
    with pytest.raises(InfeasibleParamsError):
        order_bound(0, 3, 0)


def test_sparse_interval_and_bound():
    assert sparse_interval(3, 1) == (Fraction(1), Fraction(3, 2))
    assert sparse_bound(4, 3, 3, 1) == 6
    assert sparse_bound(5, 6, 3, 2) == 6  # K_{3,2} parameters
    with pytest.raises(IntervalError, match="admissible interval"):
        sparse_bound(13, 45, 10, 4)
    with pytest.raises(IntervalError):
        sparse_bound(6, 5, 3, 1)  # average degree above 2*3*1/4
    with pytest.raises(InfeasibleParamsError):
        sparse_interval(3, 0)
    with pytest.raises(InfeasibleParamsError):
        sparse_interval(3, 3)


def test_albertson_cap():
    assert albertson_cap(3) == 4
    assert albertson_cap(0) == 0
    assert albertson_cap(6) == 32
    with pytest.raises(InfeasibleParamsError):
        albertson_cap(-1)


def test_reference_bounds_frozen_values():
    assert zhou_luo_1(60, 100, 10, 0) == pytest.approx(3089.1515247486877)
    assert zhou_luo_2(60, 100, 10, 0) == pytest.approx(math.sqrt(8_000_000))
    # both vanish on regular parameters
    assert zhou_luo_1(5, 5, 2, 2) == 0.0
    assert zhou_luo_2(5, 5, 2, 2) == 0.0
    with pytest.raises(InfeasibleParamsError):
        zhou_luo_1(2, 4, 1, 0)  # negative radicand
    with pytest.raises(InfeasibleParamsError):
        zhou_luo_2(1, 0, 1, 2)  # delta_min above delta


def test_reference_bounds_dominate_on_star_family():
    # sanity: the float reference bounds are true bounds on stars
    for k in range(2, 12):
        n, m = k + 1, k
        irr = k * (k - 1)
        assert zhou_luo_1(n, m, k, 1) >= irr - 1e-9
        assert zhou_luo_2(n, m, k, 1) >= irr - 1e-9
