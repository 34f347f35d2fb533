"""Exact linear programming over the rationals.

Two-phase primal simplex on a dense tableau of Fractions.  Bland's smallest-
index pivot rule is used in both phases, which guarantees termination without
any perturbation.  Free variables are split into positive and negative parts,
">=" rows are negated into "<=" rows, and every solve is verified against the
original program (relations, variable signs, objective value) before a
solution is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

RELATIONS = ("<=", ">=", "=")


class SolverError(RuntimeError):
    """Internal inconsistency detected while solving (should never happen)."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Variable:
    name: str
    nonneg: bool = True


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction
    label: str = ""

    def __post_init__(self) -> None:
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", _frac(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """max or min of c.x subject to linear relations and variable signs."""

    sense: str
    variables: tuple[Variable, ...]
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        if self.sense not in ("max", "min"):
            raise ValueError(f"sense must be 'max' or 'min', got {self.sense!r}")
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "objective", tuple(_frac(c) for c in self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if len(self.objective) != len(self.variables):
            raise ValueError("objective length does not match variable count")
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for con in self.constraints:
            if len(con.coeffs) != len(self.variables):
                raise ValueError(f"constraint {con.label!r} has wrong coefficient count")

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        return sum((c * _frac(assignment.get(v.name, 0))
                    for c, v in zip(self.objective, self.variables)), Fraction(0))

    def residuals(self, assignment: Mapping[str, Fraction]) -> list[Fraction]:
        """lhs - rhs per constraint."""
        values = [_frac(assignment.get(v.name, 0)) for v in self.variables]
        return [sum((c * x for c, x in zip(con.coeffs, values)), Fraction(0)) - con.rhs
                for con in self.constraints]

    def is_feasible(self, assignment: Mapping[str, Fraction]) -> bool:
        for v in self.variables:
            if v.nonneg and _frac(assignment.get(v.name, 0)) < 0:
                return False
        for con, r in zip(self.constraints, self.residuals(assignment)):
            if con.relation == "=" and r != 0:
                return False
            if con.relation == "<=" and r > 0:
                return False
            if con.relation == ">=" and r < 0:
                return False
        return True

    def export_text(self) -> str:
        """Plain-text rendering: objective, one constraint per line, signs."""

        def term(c: Fraction, name: str) -> str:
            return f"{c} {name}"

        lines = [f"{self.sense} " + " + ".join(
            term(c, v.name) for c, v in zip(self.objective, self.variables) if c != 0)]
        for con in self.constraints:
            lhs = " + ".join(term(c, v.name)
                             for c, v in zip(con.coeffs, self.variables) if c != 0) or "0"
            tag = f"  [{con.label}]" if con.label else ""
            lines.append(f"{lhs} {con.relation} {con.rhs}{tag}")
        for v in self.variables:
            lines.append(f"{v.name} >= 0" if v.nonneg else f"{v.name} free")
        return "\n".join(lines) + "\n"


@dataclass
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    assignment: dict[str, Fraction] = field(default_factory=dict)

    def nonzero(self) -> dict[str, Fraction]:
        return {k: v for k, v in self.assignment.items() if v != 0}


def _pivot(rows: list[list[Fraction]], obj: list[Fraction],
           basis: list[int], i: int, j: int) -> None:
    piv = rows[i][j]
    rows[i] = [x / piv for x in rows[i]]
    for k, row in enumerate(rows):
        if k != i and row[j] != 0:
            f = row[j]
            rows[k] = [a - f * b for a, b in zip(row, rows[i])]
    if obj[j] != 0:
        f = obj[j]
        obj[:] = [a - f * b for a, b in zip(obj, rows[i])]
    basis[i] = j


def _reduced_costs(rows: list[list[Fraction]], basis: list[int],
                   cost: Sequence[Fraction]) -> list[Fraction]:
    """Objective row [z_j - c_j ..., value] for a basis in canonical form."""
    obj = [-c for c in cost] + [Fraction(0)]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb != 0:
            obj = [a + cb * x for a, x in zip(obj, rows[i])]
    return obj


def _optimize(rows: list[list[Fraction]], obj: list[Fraction], basis: list[int]) -> str:
    """Run Bland-rule simplex iterations to optimality or unboundedness."""
    width = len(obj) - 1
    while True:
        enter = -1
        for j in range(width):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave, best = -1, None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave < 0:
            return "unbounded"
        _pivot(rows, obj, basis, leave, enter)


def solve(lp: LinearProgram) -> LpSolution:
    """Exact two-phase simplex; statuses: optimal, infeasible, unbounded."""
    # column split: one column per non-negative variable, two per free one
    cols: list[tuple[int, int]] = []
    for k, v in enumerate(lp.variables):
        cols.append((k, 1))
        if not v.nonneg:
            cols.append((k, -1))
    nstruct = len(cols)
    sense = 1 if lp.sense == "max" else -1
    cost = [sense * lp.objective[k] * s for k, s in cols]

    ineq = sum(1 for con in lp.constraints if con.relation != "=")
    width = nstruct + ineq
    rows: list[list[Fraction]] = []
    slack_at: list[int | None] = []
    slack_idx = nstruct
    for con in lp.constraints:
        a = [con.coeffs[k] * s for k, s in cols]
        b = con.rhs
        if con.relation == ">=":
            a, b = [-x for x in a], -b
        row = a + [Fraction(0)] * ineq + [b]
        if con.relation != "=":
            row[slack_idx] = Fraction(1)
            slack_at.append(slack_idx)
            slack_idx += 1
        else:
            slack_at.append(None)
        rows.append(row)

    for row in rows:
        if row[-1] < 0:
            row[:] = [-x for x in row]

    # initial basis: surviving +1 slacks, artificials elsewhere
    basis: list[int] = []
    art_cols: list[int] = []
    for i, row in enumerate(rows):
        s = slack_at[i]
        if s is not None and row[s] == 1 and all(
                rows[k][s] == 0 for k in range(len(rows)) if k != i):
            basis.append(s)
        else:
            basis.append(-1)
    for i, b in enumerate(basis):
        if b == -1:
            col = width + len(art_cols)
            art_cols.append(col)
            basis[i] = col
    total = width + len(art_cols)
    for i, row in enumerate(rows):
        ext = [Fraction(0)] * len(art_cols)
        if basis[i] >= width:
            ext[basis[i] - width] = Fraction(1)
        row[-1:-1] = ext  # insert artificial block before rhs

    if art_cols:
        phase1 = [Fraction(0)] * width + [Fraction(-1)] * len(art_cols)
        obj = _reduced_costs(rows, basis, phase1)
        status = _optimize(rows, obj, basis)
        if status != "optimal":
            raise SolverError("phase 1 cannot be unbounded")
        if obj[-1] != 0:
            return LpSolution(status="infeasible")
        # drive leftover artificials out of the basis or drop redundant rows
        for i in range(len(rows) - 1, -1, -1):
            if basis[i] >= width:
                j = next((j for j in range(width) if rows[i][j] != 0), None)
                if j is None:
                    del rows[i]
                    del basis[i]
                else:
                    _pivot(rows, obj, basis, i, j)
        rows = [row[:width] + row[-1:] for row in rows]

    obj = _reduced_costs(rows, basis, cost + [Fraction(0)] * (width - nstruct))
    status = _optimize(rows, obj, basis)
    if status == "unbounded":
        return LpSolution(status="unbounded")

    col_val = [Fraction(0)] * width
    for i, b in enumerate(basis):
        col_val[b] = rows[i][-1]
    assignment = {v.name: Fraction(0) for v in lp.variables}
    for (k, s), j in zip(cols, range(nstruct)):
        assignment[lp.variables[k].name] += s * col_val[j]
    value = sense * obj[-1]

    if not lp.is_feasible(assignment) or lp.evaluate(assignment) != value:
        raise SolverError("post-solve verification failed")
    return LpSolution(status="optimal", value=value, assignment=assignment)


__all__ = [
    "RELATIONS",
    "Variable",
    "Constraint",
    "LinearProgram",
    "LpSolution",
    "SolverError",
    "solve",
]
