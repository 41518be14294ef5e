"""Command-line front end; a thin client over the HTTP service.

Subcommands mirror the service endpoints: build, dim, formula, construct,
verify, counterexamples, plus serve to run the service under uvicorn.
Results go to stdout (or --out), diagnostics to stderr. Exit codes: 0 ok,
1 domain error (the error name appears in the message), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .client import ServiceClient, ServiceError


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        return _cmd_serve(args)
    try:
        with ServiceClient(base_url=args.server, timeout=None) as client:
            return args.handler(client, args)
    except ServiceError as e:
        if e.status_code == 422:
            print(f"usage error: {e.detail}", file=sys.stderr)
            return 2
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pismetric",
        description="Prime ideal sum graphs of finite commutative rings: "
        "build graphs, compute metric dimension, evaluate closed formulas, "
        "construct resolving sets, and run verification sweeps.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ring=True):
        sp.add_argument("--server", metavar="URL", default=None,
                        help="base URL of a running service (default: run in-process)")
        sp.add_argument("--out", metavar="FILE", default=None,
                        help="write the result to FILE ('-' = stdout, the default)")
        if ring:
            sp.add_argument("--ring", metavar="SPEC",
                            help="ring description, e.g. 'Z4 x GF(2)' or 'chain(4) x chain(4)'")

    sp = sub.add_parser("build", help="construct the graph of a ring")
    common(sp)
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.set_defaults(handler=_cmd_build)

    sp = sub.add_parser("dim", help="exact metric dimension with certificate")
    common(sp)
    sp.add_argument("--graph", metavar="FILE",
                    help="graph JSON document instead of a ring ('-' = stdin)")
    sp.add_argument("--budget", metavar="SEC", type=float, default=600.0,
                    help="time budget for the exact search (default 600)")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(handler=_cmd_dim)

    sp = sub.add_parser("formula", help="closed-form metric dimension, if covered")
    common(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_formula)

    sp = sub.add_parser("construct", help="explicit resolving set for a covered ring")
    common(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_construct)

    sp = sub.add_parser("verify", help="sweep a ring family and cross-check all routes")
    common(sp, ring=False)
    sp.add_argument("--family", required=True, choices=["reduced", "three", "chain", "custom"])
    sp.add_argument("--params", metavar="STR", default=None,
                    help="family parameters, e.g. 'n=3..6', 'c=4,5;cap=80', "
                         "'specs=[3,2]|[4,4]'")
    sp.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    sp.add_argument("--budget", metavar="SEC", type=float, default=600.0)
    sp.add_argument("--exact-cap", type=int, default=100,
                    help="skip the exact solver above this vertex count (default 100)")
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                    help="worker threads for sweep rows (default: available parallelism)")
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("counterexamples",
                        help="the small mixed rings the mixed formula must reject")
    common(sp, ring=False)
    sp.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    sp.add_argument("--budget", metavar="SEC", type=float, default=600.0)
    sp.set_defaults(handler=_cmd_counterexamples)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    return p


def _require_ring(args) -> dict:
    if not getattr(args, "ring", None):
        print("usage error: --ring is required", file=sys.stderr)
        raise SystemExit(2)
    return {"ring": args.ring}


def _write(args, text: str) -> int:
    if args.out and args.out != "-":
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    return 0


def _cmd_build(client: ServiceClient, args) -> int:
    payload = _require_ring(args) | {"format": args.format}
    resp = client.post("/build", payload)
    if args.format == "dot":
        return _write(args, resp.text)
    return _write(args, json.dumps(resp.json()["graph"]))


def _cmd_dim(client: ServiceClient, args) -> int:
    if (args.ring is None) == (args.graph is None):
        print("usage error: give exactly one of --ring or --graph", file=sys.stderr)
        return 2
    payload: dict = {"budget_seconds": args.budget}
    if args.ring is not None:
        payload["ring"] = args.ring
    else:
        text = sys.stdin.read() if args.graph == "-" else open(args.graph).read()
        payload["graph"] = json.loads(text)
    body = client.post("/dim", payload).json()
    if args.json:
        return _write(args, json.dumps(body))
    lines = [
        f"metric dimension: {body['size']} ({body['status']})",
        f"resolving set: {{{', '.join(body['set'])}}}",
        f"bounds: twin >= {body['bounds']['twin']}, counting >= {body['bounds']['info']}",
        f"elapsed: {body['millis']:.1f} ms",
    ]
    return _write(args, "\n".join(lines) + "\n")


def _cmd_formula(client: ServiceClient, args) -> int:
    body = client.post("/formula", _require_ring(args)).json()
    if args.json:
        return _write(args, json.dumps(body))
    return _write(
        args,
        f"metric dimension: {body['value']} (case {body['theorem_id']}: "
        f"{body['hypothesis_note']})\n",
    )


def _cmd_construct(client: ServiceClient, args) -> int:
    body = client.post("/construct", _require_ring(args)).json()
    if args.json:
        return _write(args, json.dumps(body))
    lines = [
        f"resolving set ({body['size']} vertices, case {body['theorem_id']}):",
        "  {" + ", ".join(body["set"]) + "}",
        f"verified resolving: {body['resolving']}",
    ]
    return _write(args, "\n".join(lines) + "\n")


def _cmd_verify(client: ServiceClient, args) -> int:
    fmt = "markdown" if args.format == "md" else args.format
    payload = {
        "family": args.family,
        "params": args.params,
        "budget_seconds": args.budget,
        "exact_cap": args.exact_cap,
        "workers": args.threads,
        "format": fmt,
    }
    resp = client.post("/verify", payload)
    text = json.dumps(resp.json(), indent=2) if fmt == "json" else resp.text
    return _write(args, text)


def _cmd_counterexamples(client: ServiceClient, args) -> int:
    fmt = "markdown" if args.format == "md" else args.format
    resp = client.post("/counterexamples", {"budget_seconds": args.budget, "format": fmt})
    text = json.dumps(resp.json(), indent=2) if fmt == "json" else resp.text
    return _write(args, text)


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("pismetric.service.app:app", host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
