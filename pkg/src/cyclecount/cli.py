"""Command-line interface: ``cyclecount {poly,moments,verify,scan,bench}``.

JSON output is canonical (sorted keys, big integers as decimal strings) so the
same inputs give identical bytes regardless of ``--threads``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from .engine import block_weight_table, cycle_polynomial
from .errors import CycleCountError, ParameterError, ParseError
from .graph import LabeledGraph, family, parse_graph
from .oracle import DEFAULT_ORACLE_LIMIT, brute_force_polynomial
from .poly import Poly
from .stats import asymptotic_scan, conjecture_scan, default_corpus, moments_from_polynomial, render_fraction

DEFAULT_BENCH = ("complete:16", "cycle:20", "path:20", "wheel:13")


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _stringify_counts(obj: Any) -> Any:
    """Turn coefficient-like integers into strings, leaving indices alone."""
    if isinstance(obj, dict):
        return {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) and k.startswith("coeff")
                    else _stringify_counts(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_stringify_counts(v) for v in obj]
    return obj


# ---------------------------------------------------------------------------
# graph input
# ---------------------------------------------------------------------------

def _load_graph(args) -> tuple[LabeledGraph, str]:
    if bool(args.family) == bool(args.file):
        raise ParameterError("give exactly one of --family or --file")
    if args.family:
        return family(args.family, args.r or 0, args.hub_last), args.family
    try:
        data = Path(args.file).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read graph file: {exc.strerror}", location=args.file) from exc
    g = parse_graph(data)
    if args.r is not None:
        g = g.with_r(args.r)
    return g, args.file


def _compute(g: LabeledGraph, args) -> tuple[Poly, str]:
    if args.oracle:
        limit = args.max_n if args.max_n is not None else DEFAULT_ORACLE_LIMIT
        return brute_force_polynomial(g, max_n=limit, workers=args.threads), "oracle"
    table = block_weight_table(g, args.max_n, threads=args.threads)
    return cycle_polynomial(g, args.max_n, table), "engine"


def _graph_record(g: LabeledGraph, source: str) -> dict:
    return {"source": source, "n": g.n, "edges": len(g.edges), "r": g.r}


def _moment_record(p: Poly, digits: int) -> dict:
    m = moments_from_polynomial(p)
    return {"mean": render_fraction(m.mean, digits), "variance": render_fraction(m.variance, digits),
            "support": list(m.support), "total": str(m.total)}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_poly(args) -> int:
    g, source = _load_graph(args)
    p, method = _compute(g, args)
    record = {"graph": _graph_record(g, source), "method": method,
              "coefficients": p.dense(g.n + 1), "total": str(p(1)), "polynomial": str(p)}
    record["coefficients"] = [str(c) for c in record["coefficients"]]
    if args.moments:
        record["moments"] = _moment_record(p, args.digits)
    if args.format == "json":
        print(_dump(record))
    else:
        print(f"{source}  n={g.n}  r={g.r}  ({method})")
        for k, c in enumerate(record["coefficients"]):
            if c != "0":
                print(f"  k={k:<3d} {c}")
        print(f"  total {record['total']}")
        if args.moments:
            mo = record["moments"]
            print(f"  mean {mo['mean']['exact']} ~ {mo['mean']['decimal']}")
            print(f"  variance {mo['variance']['exact']} ~ {mo['variance']['decimal']}")
    return 0


def cmd_moments(args) -> int:
    g, source = _load_graph(args)
    p, method = _compute(g, args)
    record = {"graph": _graph_record(g, source), "method": method, **_moment_record(p, args.digits)}
    if args.format == "json":
        print(_dump(record))
    else:
        print(f"{source}  n={g.n}  r={g.r}  ({method})")
        print(f"  mean     {record['mean']['exact']} ~ {record['mean']['decimal']}")
        print(f"  variance {record['variance']['exact']} ~ {record['variance']['decimal']}")
        print(f"  support  {record['support'][0]}..{record['support'][1]}  total {record['total']}")
    return 0


def _read_expectations(path: str) -> dict[str, str]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read expectations: {exc.strerror}", location=path) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed expectations JSON: {exc.msg}", location=f"{path}:{exc.lineno}:{exc.colno}") from exc
    if isinstance(data, dict) and "results" in data:
        return {row["id"]: row["verdict"] for row in data["results"]}
    if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
        raise ParseError("expectations must map claim ids to verdicts", location=path)
    return data


def cmd_verify(args) -> int:
    from .claims import claim_listing, verify

    if args.list:
        print(_dump(claim_listing()))
        return 0
    report = verify(ids=args.claims or None)
    if args.claims and len(report.results) != len(set(args.claims)):
        known = {r.claim_id for r in report.results}
        raise ParameterError(f"unknown claim ids: {sorted(set(args.claims) - known)}")
    print(report.to_json() if args.format == "json" else report.to_table())
    if args.expect:
        expected = _read_expectations(args.expect)
        got = report.verdicts()
        drift = {cid: (want, got.get(cid, "MISSING")) for cid, want in sorted(expected.items())
                 if got.get(cid) != want and (not args.claims or cid in args.claims)}
        if drift:
            for cid, (want, have) in drift.items():
                print(f"expectation mismatch: {cid} expected {want}, got {have}", file=sys.stderr)
            return 1
    return 0


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError as exc:
        raise ParameterError(f"--n expects LO:HI, got {text!r}") from exc
    if lo > hi or lo < 0:
        raise ParameterError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def cmd_scan(args) -> int:
    if args.conjectures:
        if args.corpus != "default":
            raise ParameterError(f"unknown corpus {args.corpus!r}")
        scan = conjecture_scan(default_corpus(args.corpus_max_n))
        record = _stringify_counts(scan.to_dict())
        if args.format == "json":
            print(_dump(record))
        else:
            print(f"{record['graphs']} graphs")
            for key in ("shape_failures", "weak_monotone_failures", "strict_monotone_failures", "restriction_invariant"):
                print(f"  {key}: {len(record[key])}")
                for row in record[key][:10]:
                    print(f"    {row}")
        return 0
    if not args.family:
        raise ParameterError("scan needs --family or --conjectures")
    if args.n is None:
        raise ParameterError("scan --family needs --n LO:HI")
    report = asymptotic_scan(args.family, _parse_range(args.n), args.r or 0)
    record = report.to_dict(args.digits)
    if args.format == "json":
        print(_dump(record))
    else:
        print(f"{report.family}  r={report.r}  n={report.n_values[0]}..{report.n_values[-1]}  "
              f"trend {report.trend}  ({report.source})")
        for key, value in sorted(record["limit"].items()):
            print(f"  measured {key}: {value}")
        for key, claims in sorted(record["claimed"].items()):
            for name, value in sorted(claims.items()):
                print(f"  claimed {key} {name}: {value}  [{report.verdicts.get(f'{key}={name}', '')}]")
        print(f"  variance strictly increasing: {report.variance_strictly_increasing}")
    return 0


def cmd_bench(args) -> int:
    specs = args.family_list or list(DEFAULT_BENCH)
    rows = []
    for spec in specs:
        g = family(spec, args.r or 0, args.hub_last)
        t0 = time.perf_counter()
        table = block_weight_table(g, args.max_n, threads=args.threads)
        t1 = time.perf_counter()
        p = cycle_polynomial(g, args.max_n, table)
        t2 = time.perf_counter()
        digest = hashlib.sha256(json.dumps(p.to_json()).encode()).hexdigest()
        rows.append({"graph": spec, "n": g.n, "r": g.r, "positive_blocks": table.positive_blocks(),
                     "table_seconds": round(t1 - t0, 4), "poly_seconds": round(t2 - t1, 4),
                     "total_seconds": round(t2 - t0, 4), "result_sha256": digest, "threads": args.threads})
    if args.format == "json":
        print(_dump(rows))
    else:
        for row in rows:
            print(f"{row['graph']:<16} n={row['n']:<3d} table {row['table_seconds']:8.3f}s  "
                  f"poly {row['poly_seconds']:8.3f}s  sha256 {row['result_sha256'][:16]}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, graph_input: bool = True):
    if graph_input:
        p.add_argument("--family", help="family spec NAME:SIZE[,SIZE], e.g. path:5 or tadpole:4,2")
        p.add_argument("--file", help="graph JSON file {\"n\", \"edges\", \"r\"}")
        method = p.add_mutually_exclusive_group()
        method.add_argument("--oracle", action="store_true", help="brute-force partition enumeration")
        method.add_argument("--engine", action="store_true", help="subset dynamic programming (default)")
    p.add_argument("--r", type=int, default=None, help="restricted prefix size")
    p.add_argument("--hub-last", action="store_true", help="place star/wheel/fan hubs at the highest label")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None, help="override the vertex guard")
    p.add_argument("--digits", type=int, default=12, help="significant digits in decimal renderings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclecount",
                                     description="Exact graphical r-Stirling numbers of the first kind.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="cycle polynomial of a graph")
    _common(p)
    p.add_argument("--moments", action="store_true", help="include exact mean and variance")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("moments", help="exact mean and variance of the block count")
    _common(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("verify", help="check every registered formula against ground truth")
    _common(p, graph_input=False)
    p.add_argument("--claims", nargs="+", metavar="ID", help="only these claim ids")
    p.add_argument("--expect", help="JSON file pinning verdicts; exit 1 on any drift")
    p.add_argument("--list", action="store_true", help="list registered claims without running them")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="asymptotic moment scans and conjecture scans")
    _common(p, graph_input=False)
    p.add_argument("--family", help="family name, e.g. path")
    p.add_argument("--n", help="size range LO:HI")
    p.add_argument("--conjectures", action="store_true")
    p.add_argument("--corpus", default="default")
    p.add_argument("--corpus-max-n", type=int, default=9)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bench", help="time the engine on family graphs")
    _common(p, graph_input=False)
    p.add_argument("--family", dest="family_list", action="append", help="family spec (repeatable)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except CycleCountError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return 0


if __name__ == "__main__":
    sys.exit(main())
