from __future__ import annotations

import itertools
import math
from fractions import Fraction as F

import pytest

from irrbounds.graphs import Graph, complete_bipartite
from irrbounds.graphio import parse_graph6, serialize_graph6
from irrbounds.oracle import (
    SearchConstraints,
    canonical_form,
    enumerate_graphs,
    max_irr,
    verify_exhaustive,
)

DEDUP_CLASS_COUNTS = [1, 2, 4, 11, 34, 156]  # graphs on 1..6 vertices


def _burnside_count(n: int) -> int:
    # number of isomorphism classes of simple graphs on n vertices,
    # computed from scratch by averaging fixed edge sets over S_n
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        cycles = 0
        for pair in pairs:
            if pair in seen:
                continue
            cycles += 1
            a, b = pair
            while (a, b) not in seen:
                seen.add((a, b))
                a, b = perm[a], perm[b]
                if a > b:
                    a, b = b, a
        total += 2 ** cycles
    return total // math.factorial(n)


def test_constraints_validation():
    SearchConstraints(n=10, m=3)
    with pytest.raises(ValueError, match="labeled search is capped at n <= 10"):
        SearchConstraints(n=11)
    with pytest.raises(ValueError, match="n <= 8"):
        SearchConstraints(n=9, dedup=True)
    with pytest.raises(ValueError):
        SearchConstraints(n=0)
    with pytest.raises(ValueError):
        SearchConstraints(n=4, m=7)
    with pytest.raises(ValueError):
        SearchConstraints(n=4, delta=-1)
    with pytest.raises(ValueError, match="delta_min <= delta"):
        SearchConstraints(n=4, delta=2, delta_min=3)
    with pytest.raises(ValueError, match="2m"):
        SearchConstraints(n=4, m=5, delta=2)
    with pytest.raises(ValueError, match="2m"):
        SearchConstraints(n=4, m=1, delta_min=1)
    with pytest.raises(ValueError, match="n - 1"):
        SearchConstraints(n=4, delta_min=4)
    # a loose cap and an exact regular family are both legal
    SearchConstraints(n=4, delta=9)
    SearchConstraints(n=4, delta=2, delta_min=2)


def test_dedup_counts_match_burnside():
    for n, expected in enumerate(DEDUP_CLASS_COUNTS, start=1):
        got = sum(1 for _ in enumerate_graphs(SearchConstraints(n=n, dedup=True)))
        assert got == expected
        if n <= 5:
            assert _burnside_count(n) == expected


def test_labeled_counts():
    # all graphs on 4 labeled vertices with exactly 2 edges: C(6, 2)
    c = SearchConstraints(n=4, m=2)
    assert sum(1 for _ in enumerate_graphs(c)) == 15
    # max degree <= 1 on 4 vertices: empty, 6 single edges, 3 matchings
    c = SearchConstraints(n=4, delta=1)
    assert sum(1 for _ in enumerate_graphs(c)) == 10
    # min degree >= 1 on 3 vertices: 3 paths and the triangle
    c = SearchConstraints(n=3, delta_min=1)
    assert sum(1 for _ in enumerate_graphs(c)) == 4


def test_max_irr_frozen_values():
    result = max_irr(SearchConstraints(n=5, m=6, delta=3))
    assert result.value == 6
    assert result.searched == 135
    assert canonical_form(result.witness) == canonical_form(complete_bipartite(3, 2))

    dd = max_irr(SearchConstraints(n=5, m=6, delta=3, dedup=True))
    assert dd.value == 6
    assert dd.searched == 4

    stars = max_irr(SearchConstraints(n=4, m=3))
    assert stars.value == 6
    assert serialize_graph6(stars.witness) == "CF"

    regular = max_irr(SearchConstraints(n=3, m=3))
    assert regular.value == 0


def test_every_valid_constraint_set_is_realizable():
    # the validator only admits combos with a graphical quasi-regular
    # degree sequence, so a matching graph always exists
    for n in range(1, 6):
        for m in range(0, n * (n - 1) // 2 + 1):
            for delta in range(0, n):
                for delta_min in range(0, delta + 1):
                    try:
                        c = SearchConstraints(n=n, m=m, delta=delta,
                                              delta_min=delta_min)
                    except ValueError:
                        continue
                    result = max_irr(c)
                    assert not result.empty, c
                    assert result.searched >= 1


def test_dedup_invariance_of_maximum():
    for m in range(0, 11):
        a = max_irr(SearchConstraints(n=5, m=m))
        b = max_irr(SearchConstraints(n=5, m=m, dedup=True))
        assert a.value == b.value


def test_canonical_form_relabeling():
    g = parse_graph6("DFw")  # K_{3,2} under one labeling
    mapping = [3, 0, 4, 1, 2]
    relabeled = Graph.from_edges(5, [(mapping[u], mapping[v]) for u, v in g.edges])
    assert canonical_form(g) == canonical_form(relabeled)
    assert canonical_form(g) != canonical_form(complete_bipartite(1, 4))


def test_verify_exhaustive_small():
    report = verify_exhaustive(5, 3)
    assert not report.violations
    assert report.class_counts == {1: 1, 2: 2, 3: 4, 4: 11, 5: 23}
    assert {r.bound for r in report.rows} == {"thm1", "cor1"}
    assert report.delta == 3 and report.delta_min is None
    assert report.worst_gap("thm1") >= 0


def test_verify_exhaustive_with_min_degree():
    report = verify_exhaustive(5, 3, delta_min=1)
    assert not report.violations
    assert {r.bound for r in report.rows} == {"thm1", "cor1", "prop1", "prop2"}
    # orders too small to host the degree floor are recorded as empty scans
    small = verify_exhaustive(3, 2, delta_min=2)
    assert small.class_counts == {1: 0, 2: 0, 3: 1}
    assert not small.violations


def test_verify_exhaustive_equality_witnesses():
    report = verify_exhaustive(5, 3)
    rows = {(r.n, r.m, r.bound): r for r in report.rows}
    row = rows[(5, 6, "thm1")]
    assert row.gap == 0
    assert "DFw" in row.equality_witnesses
    assert row.max_irr == 6
    assert row.bound_value == 6


def test_report_csv_format():
    report = verify_exhaustive(4, 3)
    csv_text = report.to_csv()
    lines = csv_text.splitlines()
    assert csv_text.endswith("\n")
    assert lines[0] == "n,m,bound,bound_value,max_irr,gap,witness"
    row = next(l for l in lines if l.startswith("4,3,thm1,"))
    parts = row.split(",")
    assert parts == ["4", "3", "thm1", "6", "6", "0", "CF"]
    # every data row parses: exact columns are integers or fractions
    for line in lines[1:]:
        n, m, bound, bval, mx, gap, witness = line.split(",")
        assert int(n) <= 4 and bound in {"thm1", "cor1"}
        assert F(gap) >= 0
