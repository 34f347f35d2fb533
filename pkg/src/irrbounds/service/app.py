"""HTTP facade over the graph, bound, certificate, LP, and search layers.

Every endpoint is a stateless request/response computation.  Domain errors
all derive from ValueError and map to HTTP 400 with the message as detail;
an internal solver inconsistency surfaces as a plain 500.
"""

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bounds import (
    InfeasibleParamsError,
    BoundParams,
    albertson_cap,
    best_side,
    order_bound,
    piece_index,
    piecewise_bound,
    smooth_bound,
    sparse_bound,
    zhou_luo_1,
    zhou_luo_2,
)
from ..curves import curves_csv
from ..duality import (
    certificate_for_variant,
    check_feasible,
    closed_form_bound,
    complementary_slackness,
    build_primal,
    matching_certificate,
)
from ..graphs import degree_profile, irregularity
from ..graphio import parse_graph, serialize_edge_list, serialize_graph6
from ..oracle import SearchConstraints, max_irr
from ..simplex import solve
from .schemas import (
    BoundRow,
    BoundsRequest,
    BoundsResponse,
    CertifyRequest,
    CertifyResponse,
    CheckModel,
    CurvesRequest,
    CurvesResponse,
    GraphRequest,
    HealthResponse,
    IrrResponse,
    LpRequest,
    LpResponse,
    ProfileModel,
    SearchBoundRow,
    SearchRequest,
    SearchResponse,
    SlacknessRow,
)


def _search_bound_rows(n: int, m: int, delta: int | None,
                       delta_min: int | None) -> list[SearchBoundRow]:
    # With no cap given, delta = n - 1 holds for every simple graph.
    eff = delta if delta is not None else max(n - 1, 1)
    rows = [("thm1", piecewise_bound(n, m, eff)),
            ("cor1", smooth_bound(n, m, eff)),
            ("albertson_cap", albertson_cap(n))]
    if delta_min is not None:
        rows.append(("prop1", order_bound(n, eff, delta_min)))
        try:
            rows.append(("prop2", sparse_bound(n, m, eff, delta_min)))
        except InfeasibleParamsError:
            pass
    return [SearchBoundRow(name=name, exact=str(v), value=float(v), holds=True)
            for name, v in rows]


def create_app() -> FastAPI:
    app = FastAPI(title="irrbounds", version=__version__)

    @app.exception_handler(ValueError)
    async def domain_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/irr", response_model=IrrResponse)
    def irr(req: GraphRequest) -> IrrResponse:
        g = parse_graph(req.text, req.format)
        profile = degree_profile(g, max(g.max_degree(), 1))
        return IrrResponse(
            n=g.n,
            m=g.m,
            max_degree=g.max_degree(),
            min_degree=g.min_degree(),
            irregularity=irregularity(g),
            profile=ProfileModel(
                delta_cap=profile.delta_cap,
                n_counts=dict(profile.n_counts),
                m_counts={f"{i},{j}": c for (i, j), c in sorted(profile.m_counts.items())},
            ),
        )

    @app.post("/bounds", response_model=BoundsResponse)
    def bounds(req: BoundsRequest) -> BoundsResponse:
        BoundParams(req.n, req.m, req.delta, req.delta_min)
        d = piece_index(req.n, req.m, req.delta)
        thm1 = piecewise_bound(req.n, req.m, req.delta)
        cor1 = smooth_bound(req.n, req.m, req.delta)
        cap = albertson_cap(req.n)
        rows = [
            BoundRow(name="thm1", applicable=True, exact=str(thm1),
                     value=float(thm1), note=f"d = {d}"),
            BoundRow(name="cor1", applicable=True, exact=str(cor1), value=float(cor1)),
        ]
        if req.delta_min is not None:
            star = best_side(req.delta, req.delta_min)
            prop1 = order_bound(req.n, req.delta, req.delta_min)
            rows.append(BoundRow(name="prop1", applicable=True, exact=str(prop1),
                                 value=float(prop1), note=f"delta_star = {star}"))
            try:
                prop2 = sparse_bound(req.n, req.m, req.delta, req.delta_min)
                rows.append(BoundRow(name="prop2", applicable=True,
                                     exact=str(prop2), value=float(prop2)))
            except InfeasibleParamsError as exc:
                rows.append(BoundRow(name="prop2", applicable=False, note=str(exc)))
            for name, fn in (("eb2", zhou_luo_1), ("eb3", zhou_luo_2)):
                try:
                    v = fn(req.n, req.m, req.delta, req.delta_min)
                    rows.append(BoundRow(name=name, applicable=True, value=v))
                except InfeasibleParamsError as exc:
                    rows.append(BoundRow(name=name, applicable=False, note=str(exc)))
        rows.append(BoundRow(name="albertson_cap", applicable=True,
                             exact=str(cap), value=float(cap)))
        return BoundsResponse(n=req.n, m=req.m, delta=req.delta,
                              delta_min=req.delta_min, rows=rows)

    @app.post("/certify", response_model=CertifyResponse)
    def certify(req: CertifyRequest) -> CertifyResponse:
        cert = certificate_for_variant(req.variant, req.delta, req.d, req.delta_min)
        report = check_feasible(cert)
        a, b = cert.bound_coefficients()
        return CertifyResponse(
            variant=cert.variant,
            delta=cert.delta,
            d=cert.d,
            delta_min=cert.delta_min,
            delta_star=cert.delta_star,
            x=str(cert.x),
            y=str(cert.y),
            z={i: str(cert.z[i]) for i in cert.index_set},
            bound=cert.bound_text(),
            coeff_n=str(a),
            coeff_m=str(b),
            feasible=report.feasible,
            checks=[CheckModel(label=c.label, residual=str(c.residual),
                               ok=c.ok, tight=c.tight)
                    for c in report.checks],
        )

    @app.post("/lp", response_model=LpResponse)
    def lp(req: LpRequest) -> LpResponse:
        delta_min = req.delta_min if req.delta_min is not None else 0
        program = build_primal(req.n, req.m, req.delta, req.variant, delta_min)
        solution = solve(program)
        closed = closed_form_bound(req.variant, req.n, req.m, req.delta, delta_min)
        if solution.status != "optimal":
            return LpResponse(status=solution.status, variant=req.variant,
                              optimal_value=None, closed_form=str(closed),
                              matches=False, profile={}, slackness=[],
                              slackness_consistent=True, violation=True)
        cert = matching_certificate(req.variant, req.n, req.m, req.delta, delta_min)
        slack = complementary_slackness(solution, cert)
        matches = solution.value == closed
        if req.variant == "thm1":
            violation = not matches or not slack.consistent
        else:
            violation = solution.value > closed or (matches and not slack.consistent)
        return LpResponse(
            status=solution.status,
            variant=req.variant,
            optimal_value=str(solution.value),
            closed_form=str(closed),
            matches=matches,
            profile={k: str(v) for k, v in sorted(solution.nonzero().items())},
            slackness=[SlacknessRow(variable=e.variable, value=str(e.value),
                                    dual_residual=str(e.dual_residual), ok=e.ok)
                       for e in slack.entries],
            slackness_consistent=slack.consistent,
            violation=violation,
        )

    @app.post("/search", response_model=SearchResponse)
    def search(req: SearchRequest) -> SearchResponse:
        constraints = SearchConstraints(req.n, req.m, req.delta,
                                        req.delta_min, req.dedup)
        result = max_irr(constraints)
        rows = _search_bound_rows(req.n, req.m, req.delta, req.delta_min)
        if result.empty:
            return SearchResponse(n=req.n, m=req.m, empty=True, max_irr=None,
                                  witness_graph6=None, witness_edges=None,
                                  searched=result.searched, bounds=rows,
                                  violation=False)
        for row in rows:
            row.holds = result.value <= Fraction(row.exact)
        return SearchResponse(
            n=req.n,
            m=req.m,
            empty=False,
            max_irr=result.value,
            witness_graph6=serialize_graph6(result.witness),
            witness_edges=serialize_edge_list(result.witness),
            searched=result.searched,
            bounds=rows,
            violation=any(not row.holds for row in rows),
        )

    @app.post("/curves", response_model=CurvesResponse)
    def curves(req: CurvesRequest) -> CurvesResponse:
        text = curves_csv(req.n, req.delta, req.delta_min)
        return CurvesResponse(n=req.n, delta=req.delta,
                              delta_min=req.delta_min, csv=text)

    return app


app = create_app()
