"""Command-line interface: ``girthcodes <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import acceptance, codes, constructions, exact, families
from .bounds import upper_bounds
from .errors import GraphFormatError, HypothesisError, InvalidCoverError
from .graph import Graph, to_dot
from .graph6 import encode_graph6, parse_graph6
from .pathcover import greedy_cover, normalize_id, normalize_ld, objective_id, objective_ld

TIMEOUT_ENV = "GIRTHCODES_TIMEOUT"
SCHEMA = 1


def emit(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))


def read_graph(source: str) -> Graph:
    text = sys.stdin.readline() if source == "-" else source
    if not text.strip():
        raise GraphFormatError("no graph6 input", 0)
    return parse_graph6(text.strip())


def default_timeout() -> float | None:
    value = os.environ.get(TIMEOUT_ENV)
    if not value:
        return None
    try:
        return float(value)
    except ValueError:
        raise SystemExit(f"error: {TIMEOUT_ENV} must be a number, got {value!r}") from None


def parse_set(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok]


def graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "graph6": encode_graph6(g)}


def build_family(args: argparse.Namespace) -> Graph:
    name = args.family
    if name == "cycle":
        return families.cycle(args.n or 5)
    if name == "path":
        return families.path(args.n or 5)
    if name == "star":
        return families.star(args.n or 3)
    if name in ("flower5", "flower6"):
        return families.flower(int(name[-1]), args.k or 2)
    if name == "g11":
        return families.g11(args.k or 2)
    if name == "random":
        rng = random.Random(args.seed)
        return families.random_girth5_graph(args.n or 12, rng, min_degree=args.min_degree, saturate=args.saturate)
    return getattr(families, name)()


def cmd_generate(args: argparse.Namespace) -> int:
    g = build_family(args)
    if args.format == "json":
        emit({"family": args.family, **graph_json(g)})
    elif args.format == "dot":
        print(to_dot(g, name=args.family))
    else:
        print(encode_graph6(g))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    members = parse_set(args.set)
    check = codes.fast_validate if args.fast else codes.validate
    verdict = check(g, args.mode, members)
    emit({"mode": args.mode, "set": sorted(set(members)), **verdict.to_json()})
    return 0 if verdict else 1


def cmd_cover(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    s = greedy_cover(g)
    if args.normalize == "ld":
        s = normalize_ld(g, s)
    elif args.normalize == "id":
        s = normalize_id(g, s)
    for p in s.paths:
        print(",".join(map(str, p)))
    emit({**s.stats(), "objective_ld": objective_ld(s), "objective_id": objective_id(s)})
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    result = constructions.METHODS[args.method](g)
    if args.format == "dot":
        print(to_dot(g, highlight=result.code))
    else:
        emit(result.to_json())
    return 0 if result.valid else 1


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    timeout = args.timeout if args.timeout is not None else default_timeout()
    result = exact.solve(g, args.mode, timeout)
    emit(result.to_json())
    return 0 if result.proved and result.identifiable else 1


def cmd_report(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    alpha = Fraction(args.alpha) if args.alpha is not None else None
    report = upper_bounds(g, alpha)
    payload = report.to_json()
    ok = True
    if args.exact:
        timeout = default_timeout()
        payload["exact"] = {}
        for mode in ("ld", "id"):
            r = exact.solve(g, mode, timeout)
            entry = {"optimum": r.optimum if r.proved else None, "proved": r.proved}
            if r.proved and r.identifiable:
                entry["violations"] = report.sandwich_violations(mode, r.optimum)
                ok &= not entry["violations"]
            payload["exact"][mode] = entry
    emit(payload)
    return 0 if ok else 1


def cmd_reproduce(args: argparse.Namespace) -> int:
    timeout = args.timeout if args.timeout is not None else default_timeout()
    checks = acceptance.run_all(timeout)
    if args.format == "json":
        emit({"checks": [{"key": c.key, "title": c.title, "passed": c.passed, "detail": c.detail, "rows": c.rows}
                         for c in checks]})
    else:
        rows = checks[0].rows
        print(f"{'graph':<12} {'param':<5} {'known':>5} {'found':>5} {'lower':>5}  status")
        for r in rows:
            found = "-" if r["found"] is None else r["found"]
            print(f"{r['graph']:<12} {r['mode']:<5} {r['expected']:>5} {found:>5} {r['lower']:>5}  {r['status']}")
        print()
        for c in checks:
            print(c.line())
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthcodes",
        description="Locating-dominating sets and identifying codes on graphs of girth at least 5.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", default="-", help="graph6 string, or - to read one line from stdin")

    p = sub.add_parser("generate", help="print a named graph")
    p.add_argument("--family", required=True, choices=families.FAMILIES)
    p.add_argument("--k", type=int, help="number of blocks for flower5/flower6/g11")
    p.add_argument("--n", type=int, help="order for cycle/path/random, leaves for star")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--saturate", action="store_true")
    p.add_argument("--format", choices=("g6", "json", "dot"), default="g6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check a vertex set")
    p.add_argument("--mode", required=True, choices=exact.MODES)
    graph_arg(p)
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--fast", action="store_true", help="use the girth-5 tests when they apply")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cover", help="greedy path cover, optionally normalised")
    graph_arg(p)
    p.add_argument("--normalize", choices=("ld", "id"))
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("construct", help="build a code from a path cover")
    p.add_argument("--method", required=True, choices=sorted(constructions.METHODS))
    graph_arg(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="exact minimum")
    p.add_argument("--mode", required=True, choices=exact.MODES)
    graph_arg(p)
    p.add_argument("--timeout", type=float, help=f"seconds (default from ${TIMEOUT_ENV})")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("report", help="evaluate upper and lower bounds")
    graph_arg(p)
    p.add_argument("--alpha", help="path-cover ratio, e.g. 1/10 (default: greedy cover)")
    p.add_argument("--exact", action="store_true", help="also solve exactly and check the bounds")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("reproduce", help="run every acceptance check")
    p.add_argument("--timeout", type=float)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, HypothesisError, InvalidCoverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
