"""Command-line front end: analyze, construct, verify, sharpness.

Exit codes: 0 clean, 1 counterexample or sharpness mismatch, 2 usage or
parse errors. Reports are JSON on stdout or a file; pass --no-timing for
byte-stable output across runs.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report as rpt
from .constructive import construct_k_ended_tree
from .errors import CapExceededError, CounterexampleError, FormatError, KendedError, PlanError
from .families import make_family, parse_family_spec
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graphs import Graph, VertexSet
from .invariants import (
    independence_number,
    set_connectivity,
    set_connectivity_pair,
)
from .treesearch import DEFAULT_TREE_CAP
from .verify import (
    SHARPNESS_NOTE,
    default_sweep_plan,
    parse_sweep_plan,
    plan_with_seed,
    run_sweep,
    verify_sharpness,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kended",
        description="Exact analysis, construction and verification of k-ended covering trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph", metavar="FILE", help="graph file, or - for stdin")
    graph_in.add_argument(
        "--format", choices=("graph6", "edgelist"), default="graph6",
        help="input format for --graph (default graph6)",
    )
    graph_in.add_argument(
        "--family", metavar="SPEC",
        help="generate the graph instead: 'kmm M K', 'cycle N', 'path N', "
             "'complete N', 'petersen', 'gnp N P SEED'",
    )
    graph_in.add_argument(
        "--set", dest="subset", default="all", metavar="SPEC",
        help="vertex subset S: comma list, 'all', 'none', or 'B' (family-provided part)",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", metavar="FILE", help="report destination (default stdout)")
    common.add_argument("--no-timing", action="store_true", help="null out durations for byte-stable output")
    common.add_argument("--cap", type=int, default=DEFAULT_TREE_CAP, help="desk-scale vertex cap for searches")

    p_analyze = sub.add_parser("analyze", parents=[graph_in, common],
                               help="alpha, kappa and the budget threshold for one instance")
    p_analyze.set_defaults(func=cmd_analyze)

    p_construct = sub.add_parser("construct", parents=[graph_in, common],
                                 help="run the augmentation construction for a leaf budget k")
    p_construct.add_argument("--k", type=int, required=True, help="leaf budget (>= 2)")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run a verification sweep from a plan file")
    p_verify.add_argument("--plan", metavar="FILE", help="plan file (default: exhaustive n <= 5)")
    p_verify.add_argument("--seed", type=int, default=None, help="override the plan seed")
    p_verify.set_defaults(func=cmd_verify)

    p_sharp = sub.add_parser("sharpness", parents=[common],
                             help="exact invariants of the complete-bipartite grid")
    p_sharp.add_argument("--m-range", default="1..3", metavar="A..B")
    p_sharp.add_argument("--k-range", default="1..3", metavar="A..B")
    p_sharp.set_defaults(func=cmd_sharpness)

    return parser


def _load_graph(args) -> tuple[Graph, VertexSet | None, dict]:
    """Read or generate the input graph; returns (graph, family subset, input echo)."""
    if args.family and args.graph:
        raise ValueError("--graph and --family are mutually exclusive")
    if args.family:
        spec = parse_family_spec(args.family)
        graph, family_subset = make_family(spec)
        echo = {"family": args.family, "graph6": emit_graph6(graph), "n": graph.n}
        return graph, family_subset, echo
    if not args.graph:
        raise ValueError("one of --graph or --family is required")
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, "r", encoding="utf-8") as handle:
            text = handle.read()
    if args.format == "graph6":
        record = text.strip().splitlines()
        if not record:
            raise FormatError("empty graph input")
        graph = parse_graph6(record[0])
    else:
        graph = parse_edge_list(text)
    echo = {"graph": args.graph, "format": args.format,
            "graph6": emit_graph6(graph), "n": graph.n}
    return graph, None, echo


def _parse_subset(spec: str, graph: Graph, family_subset: VertexSet | None) -> VertexSet:
    spec = spec.strip()
    if spec == "all":
        return VertexSet.full(graph.n)
    if spec in ("", "none"):
        return VertexSet.empty(graph.n)
    if spec == "B":
        if family_subset is None:
            raise ValueError("--set B needs a family that provides a part (kmm)")
        return family_subset
    try:
        vertices = [int(tok) for tok in spec.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad subset spec {spec!r}") from exc
    for v in vertices:
        if not 0 <= v < graph.n:
            raise ValueError(f"subset vertex {v} out of range 0..{graph.n - 1}")
    return VertexSet.from_vertices(graph.n, vertices)


def _emit(args, document: dict) -> None:
    text = rpt.render_report(document)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_analyze(args) -> int:
    start = time.perf_counter()
    graph, family_subset, echo = _load_graph(args)
    subset = _parse_subset(args.subset, graph, family_subset)
    echo["set"] = subset.to_list()
    witness = independence_number(graph, subset)
    kappa, pair = set_connectivity_pair(graph, subset)
    graph_kappa = set_connectivity(graph, VertexSet.full(graph.n))
    alpha = witness.size
    if kappa.is_infinite:
        threshold = 2
        largest_failing = None
    else:
        threshold = max(2, alpha - kappa.finite + 1)
        largest_failing = alpha - kappa.finite
    results = {
        "alpha": alpha,
        "alpha_witness": witness.witness.to_list(),
        "kappa": rpt.kappa_to_json(kappa),
        "kappa_pair": list(pair) if pair else None,
        "graph_connected": graph.is_connected(),
        "graph_connectivity": rpt.kappa_to_json(graph_kappa),
        "threshold_k": threshold,
        "largest_failing_k": largest_failing,
    }
    elapsed = None if args.no_timing else time.perf_counter() - start
    _emit(args, rpt.make_report("analyze", echo, results, elapsed))
    return EXIT_OK


def cmd_construct(args) -> int:
    start = time.perf_counter()
    graph, family_subset, echo = _load_graph(args)
    subset = _parse_subset(args.subset, graph, family_subset)
    echo["set"] = subset.to_list()
    echo["k"] = args.k
    outcome = construct_k_ended_tree(graph, subset, args.k, cap=args.cap)
    results = {
        "outcome": outcome.kind,
        "tree": rpt.tree_to_json(outcome.tree),
        "leaf_count": outcome.tree.leaf_count,
        "branch_count": outcome.tree.branch_count,
        "covers_set": outcome.tree.covers(subset),
        "residual_alpha": outcome.residual_alpha,
        "bound": outcome.bound,
        "trace": {
            "base_path": rpt.path_to_json(outcome.trace[0]) if outcome.trace else None,
            "attachments": [rpt.path_to_json(p) for p in outcome.trace[1:]],
        },
    }
    elapsed = None if args.no_timing else time.perf_counter() - start
    _emit(args, rpt.make_report("construct", echo, results, elapsed))
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    if args.plan:
        with open(args.plan, "r", encoding="utf-8") as handle:
            plan = parse_sweep_plan(handle.read())
    else:
        plan = default_sweep_plan()
    plan = plan_with_seed(plan, args.seed)
    inputs = {"plan_file": args.plan, "plan": rpt.plan_to_json(plan)}
    try:
        sweep = run_sweep(plan, cap=args.cap)
    except CounterexampleError as exc:
        results = {
            "counterexample": rpt.verdict_to_json(exc.verdict),
            "zero_counterexamples": False,
        }
        elapsed = None if args.no_timing else time.perf_counter() - start
        _emit(args, rpt.make_report("verify", inputs, results, elapsed))
        return EXIT_MISMATCH
    results = rpt.sweep_report_to_json(sweep, include_timing=not args.no_timing)
    elapsed = None if args.no_timing else time.perf_counter() - start
    _emit(args, rpt.make_report("verify", inputs, results, elapsed))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        value = int(text)
        return value, value
    return int(lo), int(hi)


def cmd_sharpness(args) -> int:
    start = time.perf_counter()
    m_lo, m_hi = _parse_range(args.m_range)
    k_lo, k_hi = _parse_range(args.k_range)
    if m_lo < 1 or k_lo < 1 or m_hi < m_lo or k_hi < k_lo:
        raise ValueError("ranges must be A..B with 1 <= A <= B")
    inputs = {"m_range": [m_lo, m_hi], "k_range": [k_lo, k_hi], "cap": args.cap}
    cells = []
    skipped = []
    all_match = True
    for m in range(m_lo, m_hi + 1):
        for k in range(k_lo, k_hi + 1):
            if 2 * m + k > args.cap:
                skipped.append([m, k])
                continue
            verdict = verify_sharpness(m, k, cap=args.cap)
            cells.append(rpt.sharpness_to_json(verdict))
            all_match = all_match and verdict.matches_expected
    results = {
        "cells": cells,
        "skipped_cells": skipped,
        "all_match": all_match,
        "note": SHARPNESS_NOTE,
    }
    elapsed = None if args.no_timing else time.perf_counter() - start
    _emit(args, rpt.make_report("sharpness", inputs, results, elapsed))
    return EXIT_OK if all_match else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PlanError, ValueError, CapExceededError, FileNotFoundError) as exc:
        print(f"kended: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CounterexampleError as exc:
        print(f"kended: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except KendedError as exc:
        print(f"kended: internal error: {exc}", file=sys.stderr)
        raise


if __name__ == "__main__":
    sys.exit(main())
