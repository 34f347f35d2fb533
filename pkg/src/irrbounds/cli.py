"""Command-line client for the irregularity-bounds service.

Each subcommand posts to the HTTP API and renders the response as text.
By default the requests run in process against the bundled app; pass
--server to talk to a running instance instead.

Exit codes: 0 success, 1 bound/certificate violation discovered,
2 usage or parse error.
"""

import argparse
import asyncio
import sys

import httpx

from .service.app import app


def _call(server: str | None, method: str, path: str, payload: dict | None):
    async def go():
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
                r = await client.request(method, path, json=payload)
                return r.status_code, r.json()
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://service") as client:
            r = await client.request(method, path, json=payload)
            return r.status_code, r.json()

    return asyncio.run(go())


def _fail(status: int, body) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    print(f"error: {detail}", file=sys.stderr)
    # 400/422 are bad requests (usage or parse); anything else is internal
    return 2 if status in (400, 422) else 1


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def cmd_irr(args: argparse.Namespace) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    status, body = _call(args.server, "POST", "/irr",
                         {"text": text, "format": args.format})
    if status != 200:
        return _fail(status, body)
    print(f"irr = {body['irregularity']}")
    print(f"n = {body['n']}  m = {body['m']}  "
          f"max degree = {body['max_degree']}  min degree = {body['min_degree']}")
    print("degree profile:")
    for i, c in sorted(body["profile"]["n_counts"].items(), key=lambda kv: int(kv[0])):
        print(f"  n_{i} = {c}")
    for key, c in body["profile"]["m_counts"].items():
        i, j = key.split(",")
        print(f"  m_{i}_{j} = {c}")
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    payload = {"n": args.n, "m": args.m, "delta": args.delta,
               "delta_min": args.delta_min}
    status, body = _call(args.server, "POST", "/bounds", payload)
    if status != 200:
        return _fail(status, body)
    head = f"bounds for n={body['n']} m={body['m']} delta={body['delta']}"
    if body["delta_min"] is not None:
        head += f" delta_min={body['delta_min']}"
    print(head)
    for row in body["rows"]:
        if not row["applicable"]:
            print(f"  {row['name']:<14}inapplicable: {row['note']}")
            continue
        exact = row["exact"] if row["exact"] is not None else "-"
        line = f"  {row['name']:<14}{exact:<16}{_fmt(row['value'])}"
        if row["note"]:
            line += f"  ({row['note']})"
        print(line)
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    payload = {"variant": args.variant, "delta": args.delta,
               "d": args.d, "delta_min": args.delta_min}
    status, body = _call(args.server, "POST", "/certify", payload)
    if status != 200:
        return _fail(status, body)
    head = f"certificate {body['variant']} delta={body['delta']}"
    if body["d"] is not None:
        head += f" d={body['d']}"
    if body["delta_min"] is not None:
        head += f" delta_min={body['delta_min']}"
    if body["delta_star"] is not None:
        head += f" delta_star={body['delta_star']}"
    print(head)
    print(f"x = {body['x']}")
    print(f"y = {body['y']}")
    for i, z in body["z"].items():
        print(f"z_{i} = {z}")
    print(f"bound: {body['bound']}")
    print("dual constraints:")
    for check in body["checks"]:
        flag = "ok" if check["ok"] else "VIOLATED"
        tight = " (tight)" if check["tight"] else ""
        print(f"  {check['label']:<24}residual = {check['residual']:<10}{flag}{tight}")
    if body["feasible"]:
        print("feasible")
        return 0
    print("INFEASIBLE")
    return 1


def cmd_lp(args: argparse.Namespace) -> int:
    payload = {"n": args.n, "m": args.m, "delta": args.delta,
               "variant": args.variant, "delta_min": args.delta_min}
    status, body = _call(args.server, "POST", "/lp", payload)
    if status != 200:
        return _fail(status, body)
    print(f"status = {body['status']}")
    if body["optimal_value"] is None:
        return 1
    print(f"OPT(P) = {body['optimal_value']}")
    print(f"closed form ({body['variant']}) = {body['closed_form']}"
          + ("  (equal)" if body["matches"] else ""))
    print("optimal profile:")
    for name, value in body["profile"].items():
        print(f"  {name} = {value}")
    print("complementary slackness:")
    for row in body["slackness"]:
        flag = "ok" if row["ok"] else "VIOLATED"
        print(f"  {row['variable']:<8}value = {row['value']:<10}"
              f"dual residual = {row['dual_residual']:<10}{flag}")
    print("consistent" if body["slackness_consistent"] else "INCONSISTENT")
    return 1 if body["violation"] else 0


def cmd_search(args: argparse.Namespace) -> int:
    payload = {"n": args.n, "m": args.m, "delta": args.delta,
               "delta_min": args.delta_min, "dedup": args.dedup}
    status, body = _call(args.server, "POST", "/search", payload)
    if status != 200:
        return _fail(status, body)
    if body["empty"]:
        print(f"no graphs match (searched {body['searched']})")
        return 0
    print(f"max irr = {body['max_irr']}  (searched {body['searched']})")
    print(f"witness graph6: {body['witness_graph6']}")
    print("witness edge list:")
    for line in body["witness_edges"].rstrip("\n").split("\n"):
        print(f"  {line}")
    print("bounds:")
    for row in body["bounds"]:
        flag = "ok" if row["holds"] else "VIOLATED"
        print(f"  {row['name']:<14}{row['exact']:<16}{_fmt(row['value'])}  {flag}")
    return 1 if body["violation"] else 0


def cmd_curves(args: argparse.Namespace) -> int:
    payload = {"n": args.n, "delta": args.delta, "delta_min": args.delta_min}
    status, body = _call(args.server, "POST", "/curves", payload)
    if status != 200:
        return _fail(status, body)
    if args.output == "-":
        sys.stdout.write(body["csv"])
        return 0
    try:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(body["csv"])
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("irrbounds.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=None,
                        help="base URL of a running service (default: in-process)")

    parser = argparse.ArgumentParser(
        prog="irrbounds",
        description="Albertson irregularity bounds: compute, certify, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("irr", parents=[common],
                       help="irregularity and degree profile of a graph file")
    p.add_argument("file", help="path to graph file, or - for stdin")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(fn=cmd_irr)

    p = sub.add_parser("bound", parents=[common],
                       help="evaluate all closed-form bounds at (n, m, delta)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--delta-min", type=int, default=None)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("certify", parents=[common],
                       help="print a dual certificate and check its feasibility")
    p.add_argument("--variant", choices=("thm1", "prop1", "prop2"), required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--d", type=int, default=None,
                   help="piece index for thm1 (0 <= d <= delta-1)")
    p.add_argument("--delta-min", type=int, default=None)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("lp", parents=[common],
                       help="solve the degree-profile LP and compare to the closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--variant", choices=("thm1", "prop1", "prop2"), default="thm1")
    p.add_argument("--delta-min", type=int, default=None)
    p.set_defaults(fn=cmd_lp)

    p = sub.add_parser("search", parents=[common],
                       help="exhaustive max-irregularity search over small graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--delta-min", type=int, default=None)
    p.add_argument("--dedup", action="store_true",
                   help="enumerate one graph per isomorphism class")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("curves", parents=[common],
                       help="CSV of all bounds for m = 0..floor(delta*n/2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--delta-min", type=int, default=0)
    p.add_argument("--output", default="-", help="output path, - for stdout")
    p.set_defaults(fn=cmd_curves)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
