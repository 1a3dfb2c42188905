"""Command-line client for the factorcover service.

By default the CLI talks to an in-process ASGI instance of the service;
point it at a running server with --server.  Machine-readable records go
to stdout (one JSON object per line); human-readable summaries to stderr.

Exit codes: 0 pass/holds, 1 violation/fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import httpx

from . import __version__

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "factorcover report record",
    "type": "object",
    "required": ["record", "command", "version"],
    "properties": {
        "record": {"enum": ["spectrum", "check", "sweep", "scan", "error"]},
        "command": {"type": "string"},
        "version": {"type": "string"},
        "elapsed_s": {"type": "number"},
        "graph6": {"type": "string"},
        "n": {"type": "integer"},
        # spectrum records: list of per-alpha objects; scan records: list of numbers
        "values": {
            "type": "array",
            "items": {
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["alpha", "value", "residual", "method"],
                        "properties": {
                            "alpha": {"type": "integer"},
                            "value": {"type": "number"},
                            "residual": {"type": "number"},
                            "method": {"type": "string"},
                        },
                    },
                    {"type": "number"},
                ]
            },
        },
        "quotient": {"type": "array"},
        "property": {"type": "string"},
        "k": {"type": "integer"},
        "criterion": {"type": "string"},
        "holds": {"type": "boolean"},
        "certificate": {"type": ["object", "null"]},
        "witness": {"type": ["object", "null"]},
        "config": {"type": "object"},
        "graphs_checked": {"type": "integer"},
        "condition_hits": {"type": "integer"},
        "violations": {"type": "array"},
        "extremal_confirmed": {"type": ["boolean", "null"]},
        "errata": {"type": "array"},
        "evidence": {"type": "string"},
        "notes": {"type": "array"},
        "passed": {"type": "boolean"},
        "which": {"type": "string"},
        "s_values": {"type": "array"},
        "maximizer": {"type": "integer"},
        "claimed": {"type": "integer"},
        "gap": {"type": "number"},
        "confirmed": {"type": "boolean"},
        "detail": {"type": "string"},
    },
}


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # no server given: run the service in-process
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _emit(record: dict, command: str, started: float) -> None:
    record = dict(record)
    record["record"] = record.get("record", "error")
    record["command"] = command
    record["version"] = __version__
    record["elapsed_s"] = round(time.monotonic() - started, 6)
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _post(client: httpx.Client, path: str, payload: dict, command: str, started: float) -> dict | None:
    resp = client.post(path, json=payload)
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text)
        _emit({"record": "error", "detail": str(detail)}, command, started)
        print(f"error: {detail}", file=sys.stderr)
        return None
    return resp.json()


def _graph_inputs(args) -> list[str]:
    graphs = list(args.graph6 or [])
    if args.file:
        if args.file == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.file) as fh:
                lines = fh.read().splitlines()
        graphs.extend(line.strip() for line in lines if line.strip())
    return graphs


def cmd_spectrum(args, client: httpx.Client) -> int:
    started = time.monotonic()
    rc = 0
    requests = []
    if args.family:
        requests.append(
            {"family": {"family": args.family, "n": args.n, "k": args.k, "s": args.s}, "alphas": args.alpha}
        )
    for lineno, g6 in enumerate(_graph_inputs(args), start=1):
        requests.append({"graph6": g6, "alphas": args.alpha, "_line": lineno})
    if not requests:
        print("error: no graph given (use --graph6, --file or --family)", file=sys.stderr)
        return 2
    for payload in requests:
        line = payload.pop("_line", None)
        data = _post(client, "/spectrum", payload, "spectrum", started)
        if data is None:
            if line is not None:
                print(f"input line {line} failed to parse", file=sys.stderr)
            return 2
        data["record"] = "spectrum"
        _emit(data, "spectrum", started)
        parts = ", ".join(
            f"lambda_{v['alpha']} = {v['value']:.10g} ({v['method']})" for v in data["values"]
        )
        extra = ""
        if data.get("quotient"):
            extra = "; quotient " + ", ".join(f"{q['kind']}: {q['value']:.10g}" for q in data["quotient"])
        print(f"{data['graph6']}: {parts}{extra}", file=sys.stderr)
    return rc


def cmd_check(args, client: httpx.Client) -> int:
    started = time.monotonic()
    graphs = _graph_inputs(args)
    if not graphs:
        print("error: no graph given (use --graph6 or --file)", file=sys.stderr)
        return 2
    rc = 0
    for g6 in graphs:
        payload = {"graph6": g6, "property": args.property, "k": args.k, "criterion": args.criterion}
        data = _post(client, "/check", payload, "check", started)
        if data is None:
            return 2
        data["record"] = "check"
        data.update({"graph6": g6, "property": args.property, "k": args.k, "criterion": args.criterion})
        _emit(data, "check", started)
        status = "holds" if data["holds"] else "fails"
        detail = ""
        if data.get("witness"):
            detail = f" (witness: {data['witness']})"
        print(f"{g6}: {args.property} k={args.k} {status}{detail}", file=sys.stderr)
        if not data["holds"]:
            rc = 1
    return rc


def cmd_sweep(args, client: httpx.Client) -> int:
    started = time.monotonic()
    payload = {
        "target": args.target,
        "n": args.n,
        "k": args.k,
        "mode": args.mode,
        "sample_count": args.samples,
        "rng_seed": args.seed,
        "tolerance": args.tolerance,
        "n_max": args.n_max,
        "k_set": args.k_set,
        "trials": args.trials,
    }
    data = _post(client, "/sweep", payload, "sweep", started)
    if data is None:
        return 2
    data["record"] = "sweep"
    _emit(data, "sweep", started)
    status = "pass" if data["passed"] else "FAIL"
    print(
        f"sweep {args.target}: {status}; checked {data['graphs_checked']}, "
        f"hits {data['condition_hits']}, violations {len(data['violations'])}, "
        f"errata {len(data['errata'])} [{data['evidence']}]",
        file=sys.stderr,
    )
    for note in data["notes"]:
        print(f"note: {note}", file=sys.stderr)
    return 0 if data["passed"] else 1


def cmd_scan(args, client: httpx.Client) -> int:
    started = time.monotonic()
    payload = {"which": args.which, "n": args.n, "k": args.k}
    data = _post(client, "/scan", payload, "scan", started)
    if data is None:
        return 2
    data["record"] = "scan"
    _emit(data, "scan", started)
    status = "confirmed" if data["confirmed"] else "NOT confirmed"
    print(
        f"scan {args.which} n={args.n} k={args.k}: maximizer s={data['maximizer']} "
        f"(claimed {data['claimed']}, gap {data['gap']:.3g}) {status}",
        file=sys.stderr,
    )
    return 0 if data["confirmed"] else 1


def cmd_serve(args, _client) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorcover", description=__doc__)
    parser.add_argument("--server", help="base URL of a running service; default is in-process")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--graph6", action="append", help="graph6 string (repeatable)")
        p.add_argument("--file", help="file with one graph6 per line, or - for stdin")

    p = sub.add_parser("spectrum", help="spectral values of a graph or a join family")
    add_graph_args(p)
    p.add_argument("--family", choices=["H", "G-empty", "G-nonempty"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--alpha", type=int, action="append", choices=[0, 1])
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="decide a factor-cover property")
    add_graph_args(p)
    p.add_argument("--property", required=True, choices=["matching-cover", "star-cover"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--criterion", choices=["direct", "lemma"], default="direct")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run a verification sweep")
    p.add_argument("--target", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=1e-9, help="threshold slack (default 1e-9)")
    p.add_argument("--n-max", type=int, default=7, dest="n_max")
    p.add_argument("--k-set", type=int, nargs="*", dest="k_set")
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("scan", help="scan a maximization lemma's s-range")
    p.add_argument("--which", required=True, choices=["h1", "h2", "h3", "h4", "h5", "h6"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "spectrum":
        if args.alpha is None:
            args.alpha = [0, 1]
        family_bits = [args.family, args.n, args.k, args.s]
        if args.family and any(x is None for x in family_bits[1:]):
            parser.error("--family requires --n, --k and --s")
    if args.command == "serve":
        return args.func(args, None)
    with _client(args.server) as client:
        return args.func(args, client)


if __name__ == "__main__":
    sys.exit(main())
