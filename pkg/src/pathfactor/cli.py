"""Command-line driver.

Every command prints a JSON report document on stdout. ``hunt`` streams
one compact JSON line per checked graph and ends with the document.

Exit codes: 0 ran to completion, 1 counterexample found, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .expr import parse_construction
from .factors import decide_factor, extract_path_factor, is_avoidable, is_critical_avoidable, sun_count
from .formats import ReportDocument, emit_graph6, parse_edge_list, parse_graph6, to_jsonable
from .graph import Graph, components, isolated_count
from .harness import (
    HarnessParams,
    build_remark_graph,
    hunt,
    summarize,
    verify_sharpness,
    verify_theorem_instance,
)
from .params import connectivity, isolated_toughness, toughness

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _graph_input(parser: argparse.ArgumentParser, required: bool = True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--g6", help="graph in graph6 format")
    group.add_argument("--edges", metavar="FILE", help="edge-list file ('order m' then 'u v' lines)")
    group.add_argument("--expr", help="construction expression, e.g. 'K3+(3*K1|K2)'")


def _load_graph(args) -> Optional[Graph]:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.edges is not None:
        try:
            text = Path(args.edges).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc}") from None
        return parse_edge_list(text)
    if args.expr is not None:
        return parse_construction(args.expr)
    return None


def _graph_summary(g: Graph) -> dict:
    return {"order": g.order, "size": g.size(), "graph6": emit_graph6(g)}


def _factor_summary(g: Graph, k: int) -> dict:
    d = decide_factor(g, k)
    return {"exists": d.holds,
            "paths": extract_path_factor(g, k) if d.holds else None,
            "certificate": d.certificate}


def cmd_analyze(args) -> tuple[dict, str, int]:
    g = _load_graph(args)
    if g.order == 0:
        raise UsageError("analyze needs a graph with at least one vertex")
    results = {
        "graph": _graph_summary(g),
        "i": isolated_count(g),
        "omega": len(components(g)),
        "connectivity": connectivity(g),
        "toughness": toughness(g),
        "isolated_toughness": isolated_toughness(g),
        "sun_count": sun_count(g),
        "factors": {"2": _factor_summary(g, 2), "3": _factor_summary(g, 3)},
    }
    return results, _digest(emit_graph6(g)), EXIT_OK


def cmd_decide(args) -> tuple[dict, str, int]:
    g = _load_graph(args)
    results = {"graph": _graph_summary(g), "k": args.k, "mode": args.mode}
    if args.mode == "factor":
        d = decide_factor(g, args.k)
        results["paths"] = extract_path_factor(g, args.k) if d.holds else None
    elif args.mode == "avoidable":
        d = is_avoidable(g, args.k)
    else:
        if args.n is None:
            raise UsageError("--mode critical needs --n")
        if args.n > g.order:
            raise UsageError(f"--n {args.n} exceeds the order {g.order}")
        results["n"] = args.n
        d = is_critical_avoidable(g, args.k, args.n)
    results.update(holds=d.holds, vacuous=d.vacuous, certificate=d.certificate)
    return results, _digest(emit_graph6(g)), EXIT_OK


def cmd_generate(args) -> tuple[dict, str, int]:
    if args.remark is not None:
        if args.expr is not None:
            raise UsageError("use either --remark or --expr")
        inst = build_remark_graph(args.remark, args.n, args.r)
        results = {
            "remark": inst.remark, "n": inst.n, "r": inst.r,
            "expression": inst.expression,
            "graph": _graph_summary(inst.graph),
            "expected": {"connectivity": inst.expected_connectivity,
                         inst.parameter: inst.expected_parameter,
                         "k": inst.k,
                         "critical_avoidable": False,
                         "criterion": inst.expected_criterion,
                         "bound": inst.expected_bound},
        }
        return results, _digest(f"remark {inst.remark} {inst.n} {inst.r}"), EXIT_OK
    if args.expr is None:
        raise UsageError("generate needs --remark or --expr")
    g = parse_construction(args.expr)
    return {"expression": args.expr, "graph": _graph_summary(g)}, _digest(emit_graph6(g)), EXIT_OK


def cmd_verify(args) -> tuple[dict, str, int]:
    g = _load_graph(args)
    if (args.theorem is None) == (args.remark is None):
        raise UsageError("verify needs exactly one of --theorem or --remark")
    if args.remark is not None:
        if g is not None:
            raise UsageError("--remark builds its own graph; drop the graph input")
        report = verify_sharpness(args.remark, args.n, args.r)
        digest = _digest(f"remark {args.remark} {args.n} {args.r}")
    else:
        if g is None:
            raise UsageError("--theorem needs a graph (--g6, --edges or --expr)")
        report = verify_theorem_instance(args.theorem, g, args.n, args.r, check_vacuous=True)
        digest = _digest(emit_graph6(g))
    code = EXIT_COUNTEREXAMPLE if report.verdict == "COUNTEREXAMPLE" else EXIT_OK
    return {"report": report}, digest, code


def cmd_hunt(args, out) -> tuple[dict, str, int]:
    params = HarnessParams(theorem=args.theorem, n=args.n, r=args.r, seed=args.seed,
                           samples=args.samples, max_order=args.max_order,
                           min_order=min(args.min_order, args.max_order))
    reports = []
    for report in hunt(params):
        reports.append(report)
        if not args.summary_only:
            out.write(json.dumps(to_jsonable(report)) + "\n")
    summary = summarize(reports)
    counterexamples = [rep for rep in reports if rep.verdict == "COUNTEREXAMPLE"]
    results = {"params": params, "summary": summary, "counterexamples": counterexamples}
    code = EXIT_COUNTEREXAMPLE if counterexamples else EXIT_OK
    return results, _digest(json.dumps(to_jsonable(params))), code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true",
                        help="report timing as null (byte-stable output)")

    parser = argparse.ArgumentParser(prog="pathfactor", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="graph parameters and factor existence")
    _graph_input(p)

    p = sub.add_parser("decide", parents=[common], help="factor / avoidable / critical avoidable")
    _graph_input(p)
    p.add_argument("--k", type=int, choices=(2, 3), required=True)
    p.add_argument("--mode", choices=("factor", "avoidable", "critical"), required=True)
    p.add_argument("--n", type=int, help="size of the deleted set W (critical mode)")

    p = sub.add_parser("generate", parents=[common], help="build a remark graph or an expression")
    p.add_argument("--remark", type=int, choices=range(1, 7))
    p.add_argument("--expr")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int, default=0)

    p = sub.add_parser("verify", parents=[common], help="check a theorem instance or a remark")
    _graph_input(p, required=False)
    p.add_argument("--theorem", type=int, choices=(6, 7, 8))
    p.add_argument("--remark", type=int, choices=range(1, 7))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int, default=0)

    p = sub.add_parser("hunt", parents=[common], help="random search for theorem counterexamples")
    p.add_argument("--theorem", type=int, choices=(6, 7, 8), required=True)
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--min-order", type=int, default=5)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--summary-only", action="store_true", help="do not stream per-graph reports")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    start = time.perf_counter()
    try:
        if args.command == "hunt":
            results, digest, code = cmd_hunt(args, out)
        else:
            handler = {"analyze": cmd_analyze, "decide": cmd_decide,
                       "generate": cmd_generate, "verify": cmd_verify}[args.command]
            results, digest, code = handler(args)
    except (UsageError, ValueError) as exc:
        print(f"pathfactor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000)

    doc = ReportDocument(__version__, " ".join(argv), digest, results, elapsed)
    out.write(doc.to_json(indent=None if args.command == "hunt" else 2) + "\n")
    return code


def run():
    sys.exit(main())
