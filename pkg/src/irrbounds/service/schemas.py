"""Request and response models for the HTTP service.

Exact rationals travel as strings ("p/q" or "p") so nothing is lost to
floating point on the wire; decimal companion fields are plain floats.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class GraphRequest(BaseModel):
    text: str
    format: Literal["edgelist", "graph6"] = "edgelist"


class ProfileModel(BaseModel):
    """Degree profile with edge buckets keyed as "i,j" (i <= j)."""

    delta_cap: int
    n_counts: dict[int, int]
    m_counts: dict[str, int]


class IrrResponse(BaseModel):
    n: int
    m: int
    max_degree: int
    min_degree: int
    irregularity: int
    profile: ProfileModel


class BoundsRequest(BaseModel):
    n: int = Field(ge=1)
    m: int = Field(ge=0)
    delta: int = Field(ge=1)
    delta_min: Optional[int] = None


class BoundRow(BaseModel):
    """One bound evaluated at the request parameters.

    exact is None for float-only reference bounds; note carries the chosen
    parameter (piece index, best side) or the condition an inapplicable
    bound violates.
    """

    name: str
    applicable: bool
    exact: Optional[str] = None
    value: Optional[float] = None
    note: str = ""


class BoundsResponse(BaseModel):
    n: int
    m: int
    delta: int
    delta_min: Optional[int]
    rows: list[BoundRow]


class CertifyRequest(BaseModel):
    variant: Literal["thm1", "prop1", "prop2"]
    delta: int = Field(ge=1)
    d: Optional[int] = None
    delta_min: Optional[int] = None


class CheckModel(BaseModel):
    label: str
    residual: str
    ok: bool
    tight: bool


class CertifyResponse(BaseModel):
    variant: str
    delta: int
    d: Optional[int]
    delta_min: Optional[int]
    delta_star: Optional[int]
    x: str
    y: str
    z: dict[int, str]
    bound: str
    coeff_n: str
    coeff_m: str
    feasible: bool
    checks: list[CheckModel]


class LpRequest(BaseModel):
    n: int = Field(ge=1)
    m: int = Field(ge=0)
    delta: int = Field(ge=1)
    variant: Literal["thm1", "prop1", "prop2"] = "thm1"
    delta_min: Optional[int] = None


class SlacknessRow(BaseModel):
    variable: str
    value: str
    dual_residual: str
    ok: bool


class LpResponse(BaseModel):
    """LP optimum versus the closed-form bound.

    violation is true when the optimum exceeds the closed form (weak duality
    broken), when the thm1 optimum differs from it at all (they are provably
    equal), or when equality holds but complementary slackness fails.
    """

    status: str
    variant: str
    optimal_value: Optional[str]
    closed_form: str
    matches: bool
    profile: dict[str, str]
    slackness: list[SlacknessRow]
    slackness_consistent: bool
    violation: bool


class SearchRequest(BaseModel):
    n: int = Field(ge=1)
    m: int = Field(ge=0)
    delta: Optional[int] = None
    delta_min: Optional[int] = None
    dedup: bool = False


class SearchBoundRow(BaseModel):
    name: str
    exact: str
    value: float
    holds: bool


class SearchResponse(BaseModel):
    n: int
    m: int
    empty: bool
    max_irr: Optional[int]
    witness_graph6: Optional[str]
    witness_edges: Optional[str]
    searched: int
    bounds: list[SearchBoundRow]
    violation: bool


class CurvesRequest(BaseModel):
    n: int = Field(ge=1)
    delta: int = Field(ge=1)
    delta_min: int = Field(default=0, ge=0)


class CurvesResponse(BaseModel):
    n: int
    delta: int
    delta_min: int
    csv: str
