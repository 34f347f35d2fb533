"""End-to-end acceptance checks for the whole package.

Each test prints a single PASS/FAIL line so a log scan shows the verdicts.
All comparisons are exact unless a bound is float-valued by definition.
"""

from __future__ import annotations

import contextlib
import io
import random
import time
from fractions import Fraction as F

from irrbounds.bounds import (
    best_side,
    piecewise_bound,
    smooth_bound,
    smooth_cap_holds,
    sparse_bound,
    sqrt2_bracket,
)
from irrbounds.cli import main
from irrbounds.duality import (
    build_primal,
    check_feasible,
    matching_certificate,
    order_certificate,
    piecewise_certificate,
    sparse_certificate,
    weak_duality_audit,
)
from irrbounds.graphs import Graph, complete_bipartite, degree_profile, irregularity
from irrbounds.oracle import verify_exhaustive
from irrbounds.simplex import solve


def _verdict(name: str, failures: list[str], detail: str) -> None:
    if failures:
        print(f"FAIL: {name}: {failures[0]} ({len(failures)} total)")
    else:
        print(f"PASS: {name}: {detail}")
    assert not failures, failures[:5]


def test_dual_certificates_feasible_for_max_degree_up_to_fifty():
    start = time.monotonic()
    failures = []
    count = 0
    for delta in range(1, 51):
        certs = [piecewise_certificate(delta, d) for d in range(delta)]
        certs += [order_certificate(delta, dm) for dm in range(delta)]
        certs += [sparse_certificate(delta, dm) for dm in range(1, delta)]
        for cert in certs:
            count += 1
            report = check_feasible(cert)
            if not report.feasible:
                failures.append(f"{cert.variant} delta={delta} infeasible")
    elapsed = time.monotonic() - start
    assert count == 3775
    if elapsed >= 10.0:
        failures.append(f"sweep took {elapsed:.1f}s, budget is 10s")
    _verdict("certificate feasibility sweep", failures,
             f"all {count} certificates feasible in {elapsed:.2f}s")


def test_complete_bipartite_attains_piecewise_and_smooth_bounds():
    failures = []
    for delta in range(2, 13):
        for d in range(1, delta):
            g = complete_bipartite(delta, d)
            n, m = delta + d, delta * d
            value = irregularity(g)
            pw = piecewise_bound(n, m, delta)
            sm = smooth_bound(n, m, delta)
            if not value == pw == sm:
                failures.append(
                    f"K_({delta},{d}): irr={value} piecewise={pw} smooth={sm}")
    _verdict("complete bipartite graphs attain the degree-cap bounds", failures,
             "irr = piecewise = smooth on K_(delta,d) for all 1 <= d < delta <= 12")


def test_complete_bipartite_attains_order_and_sparse_bounds():
    failures = []
    for delta in range(1, 13):
        for dm in range(delta):
            star = best_side(delta, dm)
            g = complete_bipartite(delta, star)
            cert = order_certificate(delta, dm)
            if irregularity(g) != cert.value_at(delta + star, delta * star):
                failures.append(f"order bound not attained at delta={delta} dm={dm}")
        for dm in range(1, delta):
            g = complete_bipartite(delta, dm)
            bound = sparse_bound(delta + dm, delta * dm, delta, dm)
            if irregularity(g) != bound:
                failures.append(f"sparse bound not attained at delta={delta} dm={dm}")
            regular = sparse_bound(2 * delta, dm * delta, delta, dm)
            if regular != 0:
                failures.append(
                    f"sparse bound nonzero on regular parameters delta={delta} dm={dm}")
    _verdict("complete bipartite graphs attain the order and sparse bounds",
             failures, "exact equality for all delta <= 12")


def test_lp_optimum_equals_piecewise_bound_across_grid():
    start = time.monotonic()
    failures = []
    count = 0
    for delta in range(2, 7):
        for n in range(4, 21):
            for m in range(delta * n // 2 + 1):
                count += 1
                value = solve(build_primal(n, m, delta)).value
                expected = piecewise_bound(n, m, delta)
                if value != expected:
                    failures.append(
                        f"n={n} m={m} delta={delta}: LP={value} closed={expected}")
    elapsed = time.monotonic() - start
    assert count == 2117
    if elapsed >= 300.0:
        failures.append(f"grid took {elapsed:.1f}s, budget is 300s")
    _verdict("LP optimum equals the piecewise bound", failures,
             f"{count} programs solved, all equal, in {elapsed:.1f}s")


def test_no_bound_violated_on_graphs_up_to_seven_vertices():
    start = time.monotonic()
    failures = []
    for delta in range(1, 7):
        report = verify_exhaustive(7, delta)
        for row in report.violations:
            failures.append(f"delta={delta} n={row.n} m={row.m} "
                            f"{row.bound} gap={row.gap}")
        if delta == 6 and report.class_counts != {
                1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}:
            failures.append(f"class counts off: {report.class_counts}")
    elapsed = time.monotonic() - start
    if elapsed >= 600.0:
        failures.append(f"searches took {elapsed:.1f}s, budget is 600s")
    _verdict("exhaustive search finds no bound violation", failures,
             f"all isomorphism classes on <= 7 vertices checked in {elapsed:.1f}s")


def test_best_side_lies_in_sqrt2_bracket_up_to_ten_thousand():
    start = time.monotonic()
    failures = []
    for delta in range(1, 10001):
        lo, hi = sqrt2_bracket(delta)
        star = best_side(delta, 0)
        if hi != lo + 1 or star not in (lo, hi):
            failures.append(f"delta={delta}: star={star} bracket=({lo},{hi})")
    elapsed = time.monotonic() - start
    if elapsed >= 5.0:
        failures.append(f"scan took {elapsed:.1f}s, budget is 5s")
    _verdict("best side stays in the sqrt(2) bracket", failures,
             f"10000 max degrees checked in {elapsed:.2f}s")


def test_smooth_bound_stays_under_strict_cap():
    failures = []
    count = 0
    for delta in range(1, 13):
        for n in range(1, 61):
            for m in range(1, delta * n // 2 + 1):
                count += 1
                check = smooth_cap_holds(n, m, delta)
                if not check.holds:
                    failures.append(f"n={n} m={m} delta={delta}: "
                                    f"bound {check.bound} reaches cap {check.cap}")
    _verdict("smooth bound is strictly below the irrational cap", failures,
             f"{count} parameter triples checked")


def _curve_rows(argv: list[str]) -> list[tuple[int, F, F, float, float]]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    assert code == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "m,thm1,cor1,eb2,eb3"
    rows = []
    for line in lines[1:]:
        m, thm1, cor1, eb2, eb3 = line.split(",")
        rows.append((int(m), F(thm1), F(cor1), float(eb2), float(eb3)))
    return rows


def test_curve_csvs_preserve_bound_ordering():
    failures = []
    configs = [(60, 3, None), (100, 10, None), (60, 10, 0)]
    for n, delta, delta_min in configs:
        argv = ["curves", "--n", str(n), "--delta", str(delta)]
        if delta_min is not None:
            argv += ["--delta-min", str(delta_min)]
        rows = _curve_rows(argv)
        for m, thm1, cor1, eb2, eb3 in rows:
            if thm1 > cor1:
                failures.append(f"n={n} delta={delta} m={m}: thm1={thm1} > cor1={cor1}")
            at_breakpoint = delta * m % (delta * n - m) == 0
            if (thm1 == cor1) != at_breakpoint:
                failures.append(f"n={n} delta={delta} m={m}: equality pattern off "
                                f"(thm1={thm1}, cor1={cor1})")
            if delta_min is None or m < 1:
                continue
            if not float(cor1) < eb2:
                failures.append(f"n={n} delta={delta} delta_min={delta_min} m={m}: "
                                f"cor1={cor1} not below eb2={eb2:.6f}")
            if not float(cor1) < eb3:
                failures.append(f"n={n} delta={delta} delta_min={delta_min} m={m}: "
                                f"cor1={cor1} not below eb3={eb3:.6f}")
    _verdict("curve CSVs keep the documented bound ordering", failures,
             "thm1 <= cor1 with breakpoint equality; reference bounds stay above")


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(1, 12)
    p = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def test_weak_duality_gap_nonnegative_on_random_graphs():
    rng = random.Random(20260814)
    failures = []
    for k in range(100):
        g = _random_graph(rng)
        delta = max(g.max_degree(), 1)
        cert = matching_certificate("thm1", g.n, g.m, delta)
        report = weak_duality_audit(degree_profile(g, delta), cert, g.n, g.m)
        if not report.identity_ok or report.gap < 0:
            failures.append(f"graph {k}: n={g.n} m={g.m} gap={report.gap}")
    for delta in range(2, 13):
        for d in range(1, delta):
            g = complete_bipartite(delta, d)
            cert = matching_certificate("thm1", g.n, g.m, delta)
            report = weak_duality_audit(degree_profile(g, delta), cert, g.n, g.m)
            if report.gap != 0:
                failures.append(f"K_({delta},{d}): gap={report.gap}")
    _verdict("weak duality audit", failures,
             "100 random graphs non-negative, complete bipartite graphs tight")
