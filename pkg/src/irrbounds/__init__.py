"""Exact irregularity bounds for graphs with bounded degrees.

Core pieces: graph and degree-profile primitives (graphs, graphio), closed
form bounds (bounds), an exact rational simplex (simplex), the profile LPs
with dual certificates tying the two together (duality), exhaustive search
oracles (oracle), comparison curves (curves), plus a FastAPI service and a
thin CLI client on top.
"""

from .bounds import (
    BoundParams,
    CapCheck,
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
from .curves import CurvePoint, curve_points, curves_csv
from .duality import (
    VARIANTS,
    DualCertificate,
    FeasibilityReport,
    SlacknessReport,
    WeakDualityReport,
    build_dual,
    build_primal,
    certificate_for_variant,
    check_feasible,
    check_feasible_fast,
    closed_form_bound,
    complementary_slackness,
    index_sets,
    matching_certificate,
    order_certificate,
    piecewise_certificate,
    profile_assignment,
    sparse_certificate,
    weak_duality_audit,
)
from .graphio import (
    FORMATS,
    GraphParseError,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    serialize_edge_list,
    serialize_graph,
    serialize_graph6,
)
from .graphs import (
    DegreeProfile,
    Graph,
    GraphError,
    complete_bipartite,
    components,
    connectify,
    degree_profile,
    disjoint_union,
    irregularity,
    is_connected,
    regular_graph,
    split_graph,
)
from .oracle import (
    DEDUP_LIMIT,
    LABELED_LIMIT,
    ExhaustiveReport,
    MaxIrrResult,
    SearchConstraints,
    SearchLimitError,
    canonical_form,
    enumerate_graphs,
    max_irr,
    verify_exhaustive,
)
from .simplex import Constraint, LinearProgram, LpSolution, Variable, solve

__version__ = "0.1.0"
