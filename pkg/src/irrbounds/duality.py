"""Degree-profile linear programs, their duals, and exact dual certificates.

The primal program (variant "thm1") relaxes a graph with n vertices, m edges
and max degree <= D into a degree profile: variables n_i (vertices of degree
i, 0 <= i <= D) and m_{i,j} (edges with endpoint degrees i <= j), objective
sum (j - i) m_{i,j}, constraints fixing the vertex count, the edge count, and
the degree-incidence identity at every positive degree.  Variant "prop1"
restricts degrees to [delta_min, D]; variant "prop2" does the same and also
frees the dual scalar x (no degree-0 vertices exist to force its sign).

Each closed-form bound in `bounds` has a hand-written dual-feasible point
(x, y, z) whose objective n x + 2 m y equals the bound; check_feasible
verifies every dual constraint exactly, which proves the bound without
running the simplex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .bounds import (
    BoundParams,
    InfeasibleParamsError,
    best_side,
    order_bound,
    piece_index,
    piecewise_bound,
    side_rate,
    sparse_bound,
)
from .graphs import DegreeProfile
from .simplex import Constraint, LinearProgram, LpSolution, Variable

VARIANTS = ("thm1", "prop1", "prop2")


def _validate_variant(variant: str, delta: int, delta_min: int) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if delta < 1:
        raise InfeasibleParamsError(f"need delta >= 1, got {delta}")
    if variant == "thm1":
        if delta_min != 0:
            raise InfeasibleParamsError("variant 'thm1' does not take a min-degree floor")
    elif variant == "prop1":
        if not 0 <= delta_min < delta:
            raise InfeasibleParamsError(
                f"variant 'prop1' needs 0 <= delta_min < delta, got {delta_min}")
    else:
        if not 1 <= delta_min < delta:
            raise InfeasibleParamsError(
                f"variant 'prop2' needs 1 <= delta_min < delta, got {delta_min}")


def index_sets(variant: str, delta: int, delta_min: int = 0) -> tuple[list[int], list[int]]:
    """(I0, I): degrees allowed for vertices, and for edge endpoints."""
    _validate_variant(variant, delta, delta_min)
    if variant == "thm1":
        lo = 0
    else:
        lo = delta_min
    i0 = list(range(lo, delta + 1))
    i = [k for k in i0 if k != 0]
    return i0, i


def _x_nonneg(variant: str) -> bool:
    # the sign of x is the dual constraint contributed by the variable n_0,
    # present exactly when degree 0 is allowed; "prop1" keeps it regardless
    return variant != "prop2"


def build_primal(n: int, m: int, delta: int, variant: str = "thm1",
                 delta_min: int = 0) -> LinearProgram:
    """Profile relaxation LP; its optimum upper-bounds every matching graph."""
    BoundParams(n, m, delta, delta_min if variant != "thm1" else None)
    i0, i_set = index_sets(variant, delta, delta_min)
    variables = [Variable(f"n_{i}") for i in i0]
    pairs = [(i, j) for i in i_set for j in i_set if i <= j]
    variables += [Variable(f"m_{i}_{j}") for i, j in pairs]
    index = {v.name: k for k, v in enumerate(variables)}
    nvars = len(variables)

    objective = [Fraction(0)] * nvars
    for i, j in pairs:
        objective[index[f"m_{i}_{j}"]] = Fraction(j - i)

    def row(entries: dict[str, int | Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * nvars
        for name, c in entries.items():
            out[index[name]] = Fraction(c)
        return tuple(out)

    constraints = [
        Constraint(row({f"n_{i}": 1 for i in i0}), "=", Fraction(n), "vertices"),
        Constraint(row({f"n_{i}": i for i in i0}), "=", Fraction(2 * m), "edges"),
    ]
    for i in i_set:
        entries: dict[str, int | Fraction] = {f"n_{i}": -i}
        for a, b in pairs:
            if a == i and b == i:
                entries[f"m_{a}_{b}"] = 2
            elif a == i or b == i:
                entries[f"m_{a}_{b}"] = 1
        constraints.append(Constraint(row(entries), "=", Fraction(0), f"incidence_{i}"))
    return LinearProgram("max", tuple(variables), tuple(objective), tuple(constraints))


def build_dual(n: int, m: int, delta: int, variant: str = "thm1",
               delta_min: int = 0) -> LinearProgram:
    """Dual of build_primal: min n x + 2 m y over the certificate constraints."""
    BoundParams(n, m, delta, delta_min if variant != "thm1" else None)
    _, i_set = index_sets(variant, delta, delta_min)
    variables = [Variable("x", nonneg=_x_nonneg(variant)), Variable("y", nonneg=False)]
    variables += [Variable(f"z_{i}") for i in i_set]
    index = {v.name: k for k, v in enumerate(variables)}
    nvars = len(variables)

    objective = [Fraction(0)] * nvars
    objective[index["x"]] = Fraction(n)
    objective[index["y"]] = Fraction(2 * m)

    def row(entries: dict[str, int | Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * nvars
        for name, c in entries.items():
            out[index[name]] = Fraction(c)
        return tuple(out)

    constraints = []
    for a in i_set:
        for b in i_set:
            if a < b:
                constraints.append(Constraint(
                    row({f"z_{a}": 1, f"z_{b}": 1}), ">=", Fraction(b - a), f"pair_{a}_{b}"))
    for i in i_set:
        constraints.append(Constraint(
            row({"x": 1, "y": i, f"z_{i}": -i}), ">=", Fraction(0), f"link_{i}"))
    return LinearProgram("min", tuple(variables), tuple(objective), tuple(constraints))


@dataclass(frozen=True)
class DualCertificate:
    """A dual point (x, y, z_i) certifying the bound n x + 2 m y."""

    variant: str
    delta: int
    x: Fraction
    y: Fraction
    z: Mapping[int, Fraction]
    d: int | None = None
    delta_min: int | None = None
    delta_star: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", dict(sorted(self.z.items())))

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(self.z.keys())

    def value_at(self, n: int, m: int) -> Fraction:
        return n * self.x + 2 * m * self.y

    def bound_coefficients(self) -> tuple[Fraction, Fraction]:
        """(a, b) with bound = a*n + b*m."""
        return self.x, 2 * self.y

    def bound_text(self) -> str:
        a, b = self.bound_coefficients()
        sign = "-" if b < 0 else "+"
        return f"{a}*n {sign} {abs(b)}*m"

    def as_assignment(self) -> dict[str, Fraction]:
        out = {"x": self.x, "y": self.y}
        out.update({f"z_{i}": v for i, v in self.z.items()})
        return out


def piecewise_certificate(delta: int, d: int) -> DualCertificate:
    """Certificate of piecewise_bound's piece d over degrees {0..delta}.

    x = d(d+1), y = (D^2 - (2d+1)D - d^2 - d) / (2D), z_i = x/i + y.
    """
    if not 0 <= d < delta:
        raise InfeasibleParamsError(f"need 0 <= d < delta, got d={d}, delta={delta}")
    x = Fraction(d * (d + 1))
    y = Fraction(delta * delta - (2 * d + 1) * delta - d * d - d, 2 * delta)
    z = {i: x / i + y for i in range(1, delta + 1)}
    return DualCertificate("thm1", delta, x, y, z, d=d)


def order_certificate(delta: int, delta_min: int) -> DualCertificate:
    """Certificate of order_bound: x = max side rate, y = 0, z_i = x/i."""
    star = best_side(delta, delta_min)
    x = side_rate(delta, star)
    lo = max(delta_min, 1)
    z = {i: x / i for i in range(lo, delta + 1)}
    return DualCertificate("prop1", delta, x, Fraction(0), z,
                           delta_min=delta_min, delta_star=star)


def sparse_certificate(delta: int, delta_min: int) -> DualCertificate:
    """Certificate of sparse_bound: x = -dD, y = D, z_i = D(1 - d/i)."""
    if not 1 <= delta_min < delta:
        raise InfeasibleParamsError(
            f"need 1 <= delta_min < delta, got delta_min={delta_min}, delta={delta}")
    x = Fraction(-delta_min * delta)
    y = Fraction(delta)
    z = {i: x / i + y for i in range(delta_min, delta + 1)}
    return DualCertificate("prop2", delta, x, y, z, delta_min=delta_min)


def certificate_for_variant(variant: str, delta: int, d: int | None = None,
                            delta_min: int | None = None) -> DualCertificate:
    """Dispatch on the variant token used by the CLI and the service."""
    if variant == "thm1":
        if d is None:
            raise ValueError("variant 'thm1' requires the piece index d")
        return piecewise_certificate(delta, d)
    if variant == "prop1":
        return order_certificate(delta, 0 if delta_min is None else delta_min)
    if variant == "prop2":
        if delta_min is None:
            raise ValueError("variant 'prop2' requires delta_min")
        return sparse_certificate(delta, delta_min)
    raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass(frozen=True, slots=True)
class DualCheck:
    """One dual constraint evaluation: residual = lhs - rhs, exact."""

    label: str
    residual: Fraction
    ok: bool
    tight: bool


@dataclass
class FeasibilityReport:
    feasible: bool
    checks: list[DualCheck]
    violations: list[DualCheck] = field(default_factory=list)

    @property
    def tight_labels(self) -> list[str]:
        return [c.label for c in self.checks if c.tight]

    def render(self) -> str:
        lines = []
        for c in self.checks:
            mark = "tight" if c.tight else ("ok" if c.ok else "VIOLATED")
            lines.append(f"{c.label}: residual {c.residual} [{mark}]")
        lines.append("feasible" if self.feasible else
                     f"INFEASIBLE ({len(self.violations)} violated)")
        return "\n".join(lines)


def check_feasible(cert: DualCertificate, delta: int | None = None) -> FeasibilityReport:
    """Verify every dual constraint of the certificate's program exactly.

    Scales (x, y, z) to a common integer denominator once, so the quadratic
    number of pair constraints costs integer adds rather than Fraction ops.
    """
    if delta is not None and delta != cert.delta:
        raise InfeasibleParamsError(
            f"certificate was built for delta={cert.delta}, not {delta}")
    _, i_set = index_sets(cert.variant, cert.delta,
                          cert.delta_min if cert.delta_min is not None else 0)
    if list(cert.index_set) != i_set:
        raise InfeasibleParamsError(
            f"certificate indexes {list(cert.index_set)} do not match variant "
            f"{cert.variant!r} with delta={cert.delta} (expected {i_set})")

    den = math.lcm(cert.x.denominator, cert.y.denominator,
                   *(v.denominator for v in cert.z.values()))
    xs = cert.x.numerator * (den // cert.x.denominator)
    ys = cert.y.numerator * (den // cert.y.denominator)
    zs = {i: v.numerator * (den // v.denominator) for i, v in cert.z.items()}

    checks: list[DualCheck] = []

    def add(label: str, num: int) -> None:
        checks.append(DualCheck(label, Fraction(num, den), num >= 0, num == 0))

    if _x_nonneg(cert.variant):
        add("x >= 0", xs)
    for i in i_set:
        add(f"z_{i} >= 0", zs[i])
    for a_pos, a in enumerate(i_set):
        za = zs[a]
        for b in i_set[a_pos + 1:]:
            add(f"z_{a} + z_{b} >= {b - a}", za + zs[b] - (b - a) * den)
    for i in i_set:
        add(f"x + {i}*y >= {i}*z_{i}", xs + i * ys - i * zs[i])

    violations = [c for c in checks if not c.ok]
    return FeasibilityReport(feasible=not violations, checks=checks, violations=violations)


def check_feasible_fast(cert: DualCertificate) -> bool:
    """Linear-size feasibility test using monotonicity of z.

    For a monotone z the binding pair constraints are (i, max) when z is
    non-increasing and (min, j) when non-decreasing; monotonicity itself is
    verified, so a True result implies full pairwise feasibility.
    """
    _, i_set = index_sets(cert.variant, cert.delta,
                          cert.delta_min if cert.delta_min is not None else 0)
    z = cert.z
    if _x_nonneg(cert.variant) and cert.x < 0:
        return False
    if any(z[i] < 0 for i in i_set):
        return False
    if any(cert.x + i * cert.y - i * z[i] < 0 for i in i_set):
        return False
    noninc = all(z[a] >= z[b] for a, b in zip(i_set, i_set[1:]))
    nondec = all(z[a] <= z[b] for a, b in zip(i_set, i_set[1:]))
    if not (noninc or nondec):
        return False
    if len(i_set) >= 2:
        if noninc:
            hi = i_set[-1]
            return all(z[i] + z[hi] >= hi - i for i in i_set[:-1])
        lo = i_set[0]
        return all(z[lo] + z[j] >= j - lo for j in i_set[1:])
    return True


def profile_assignment(profile: DegreeProfile, variant: str = "thm1",
                       delta_min: int = 0) -> dict[str, Fraction]:
    """Map a degree profile onto the primal variables of its variant's LP."""
    i0, i_set = index_sets(variant, profile.delta_cap, delta_min)
    out = {f"n_{i}": Fraction(0) for i in i0}
    for i in i_set:
        for j in i_set:
            if i <= j:
                out[f"m_{i}_{j}"] = Fraction(0)
    for i, c in profile.n_counts.items():
        if i not in i0:
            raise InfeasibleParamsError(
                f"profile has {c} vertices of degree {i}, outside the index set {i0[0]}..{i0[-1]}")
        out[f"n_{i}"] = Fraction(c)
    for (i, j), c in profile.m_counts.items():
        if i not in i_set or j not in i_set:
            raise InfeasibleParamsError(
                f"profile has edges with endpoint degrees ({i}, {j}) outside the index set")
        out[f"m_{i}_{j}"] = Fraction(c)
    return out


@dataclass
class WeakDualityReport:
    """Exact decomposition dual - primal = sum of complementary slack terms."""

    primal_value: Fraction
    dual_value: Fraction
    gap: Fraction
    pair_slack: Fraction
    diagonal_slack: Fraction
    isolated_slack: Fraction
    link_slack: Fraction
    identity_ok: bool


def weak_duality_audit(profile: DegreeProfile, cert: DualCertificate,
                       n: int, m: int) -> WeakDualityReport:
    """Audit irr(profile) <= n x + 2 m y term by term.

    The decomposition regroups the profile's incidence identities:
    dual - primal = sum_{i<j} (z_i + z_j - (j-i)) m_ij + 2 sum_i z_i m_ii
                    + x n_0 + sum_i (x + i y - i z_i) n_i,
    every term non-negative for a feasible certificate.
    """
    if profile.delta_cap != cert.delta:
        raise InfeasibleParamsError(
            f"profile delta_cap={profile.delta_cap} does not match certificate delta={cert.delta}")
    if profile.n != n or profile.m != m:
        raise InfeasibleParamsError(
            f"profile has n={profile.n}, m={profile.m}; audit asked for n={n}, m={m}")
    delta_min = cert.delta_min if cert.delta_min is not None else 0
    profile_assignment(profile, cert.variant, delta_min)  # index-set compatibility
    _, i_set = index_sets(cert.variant, cert.delta, delta_min)

    primal = Fraction(profile.weighted_difference())
    pair = Fraction(0)
    diag = Fraction(0)
    for (i, j), c in profile.m_counts.items():
        if i == j:
            diag += 2 * cert.z[i] * c
        else:
            pair += (cert.z[i] + cert.z[j] - (j - i)) * c
    isolated = cert.x * profile.vertex_count(0)
    link = sum(((cert.x + i * cert.y - i * cert.z[i]) * profile.vertex_count(i)
                for i in i_set), Fraction(0))
    dual = cert.value_at(n, m)
    identity_ok = primal + pair + diag + isolated + link == dual
    return WeakDualityReport(
        primal_value=primal, dual_value=dual, gap=dual - primal,
        pair_slack=pair, diagonal_slack=diag, isolated_slack=isolated,
        link_slack=link, identity_ok=identity_ok)


@dataclass(frozen=True, slots=True)
class SlacknessEntry:
    variable: str
    value: Fraction
    dual_residual: Fraction
    ok: bool


@dataclass
class SlacknessReport:
    consistent: bool
    entries: list[SlacknessEntry]

    @property
    def violations(self) -> list[SlacknessEntry]:
        return [e for e in self.entries if not e.ok]


def complementary_slackness(solution: LpSolution, cert: DualCertificate) -> SlacknessReport:
    """Pair each positive primal variable with its dual constraint residual.

    A positive n_i or m_{i,j} whose dual constraint is slack disproves joint
    optimality of the solution and the certificate.
    """
    if solution.status != "optimal":
        raise ValueError(f"need an optimal solution, got status {solution.status!r}")
    entries: list[SlacknessEntry] = []
    for name, value in solution.assignment.items():
        parts = name.split("_")
        if parts[0] == "n":
            i = int(parts[1])
            residual = cert.x if i == 0 else cert.x + i * cert.y - i * cert.z[i]
        elif parts[0] == "m":
            i, j = int(parts[1]), int(parts[2])
            residual = 2 * cert.z[i] if i == j else cert.z[i] + cert.z[j] - (j - i)
        else:
            raise ValueError(f"unrecognized primal variable {name!r}")
        ok = value == 0 or residual == 0
        entries.append(SlacknessEntry(name, value, residual, ok))
    return SlacknessReport(consistent=all(e.ok for e in entries), entries=entries)


def closed_form_bound(variant: str, n: int, m: int, delta: int,
                      delta_min: int = 0) -> Fraction:
    """The closed-form bound the variant's LP is expected to reproduce."""
    if variant == "thm1":
        return piecewise_bound(n, m, delta)
    if variant == "prop1":
        return order_bound(n, delta, delta_min)
    if variant == "prop2":
        return sparse_bound(n, m, delta, delta_min)
    raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def matching_certificate(variant: str, n: int, m: int, delta: int,
                         delta_min: int = 0) -> DualCertificate:
    """The certificate whose value matches closed_form_bound at (n, m)."""
    if variant == "thm1":
        return piecewise_certificate(delta, piece_index(n, m, delta))
    if variant == "prop1":
        return order_certificate(delta, delta_min)
    if variant == "prop2":
        return sparse_certificate(delta, delta_min)
    raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


__all__ = [
    "VARIANTS",
    "index_sets",
    "build_primal",
    "build_dual",
    "DualCertificate",
    "piecewise_certificate",
    "order_certificate",
    "sparse_certificate",
    "certificate_for_variant",
    "DualCheck",
    "FeasibilityReport",
    "check_feasible",
    "check_feasible_fast",
    "profile_assignment",
    "WeakDualityReport",
    "weak_duality_audit",
    "SlacknessEntry",
    "SlacknessReport",
    "complementary_slackness",
    "closed_form_bound",
    "matching_certificate",
]
