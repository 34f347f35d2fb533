from __future__ import annotations

import math
from fractions import Fraction as F

from irrbounds.curves import curve_points, curves_csv, format_fraction

HEADER = "m,thm1,cor1,eb2,eb3"


def _rows(csv_text: str) -> list[list[str]]:
    lines = csv_text.splitlines()
    assert lines[0] == HEADER
    return [line.split(",") for line in lines[1:]]


def test_header_and_length():
    csv_text = curves_csv(60, 3)
    lines = csv_text.splitlines()
    assert lines[0] == HEADER
    assert len(lines) == 3 * 60 // 2 + 2  # header + one row per m in [0, 90]
    assert csv_text.endswith("\n")


def test_m_column_is_the_full_range():
    rows = _rows(curves_csv(20, 5))
    assert [int(r[0]) for r in rows] == list(range(51))


def test_frozen_rows():
    rows = {int(r[0]): r for r in _rows(curves_csv(60, 3))}
    assert rows[0] == ["0", "0", "0", "0.000000", "0.000000"]
    assert rows[45][:3] == ["45", "90", "90"]

    rows = {int(r[0]): r for r in _rows(curves_csv(60, 10, 0))}
    assert rows[100][2] == "800"
    assert rows[100][4] == f"{math.sqrt(8000000):.6f}"


def test_deterministic_byte_identical():
    a = curves_csv(100, 10)
    b = curves_csv(100, 10)
    assert a == b
    assert curves_csv(60, 10, 0) == curves_csv(60, 10, 0)


def test_piecewise_never_exceeds_smooth():
    for n, delta in [(60, 3), (100, 10), (17, 4)]:
        for r in _rows(curves_csv(n, delta)):
            assert F(r[1]) <= F(r[2])


def test_points_match_csv_formatting():
    points = curve_points(9, 4)
    rows = _rows(curves_csv(9, 4))
    assert len(points) == len(rows)
    for p, r in zip(points, rows):
        assert r == [str(p.m), format_fraction(p.thm1), format_fraction(p.cor1),
                     f"{p.eb2:.6f}", f"{p.eb3:.6f}"]
    assert format_fraction(F(3, 2)) == "3/2"
    assert format_fraction(F(8, 4)) == "2"
