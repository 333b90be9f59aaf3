"""Command-line interface: analysis, minimization, witnesses, and sweeps.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1
when a mathematical property was refuted (a sweep counterexample or a
witness assertion failure), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import cover, sweep as sweep_mod
from .cover import RefutationError
from .graph import Graph, ParseError, parse_edge_list, parse_graph6, to_dot, to_graph6
from .matching import Matching

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


def canonical_json(payload: dict) -> str:
    """Byte-stable rendering: sorted keys, compact separators, one trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _edge_pairs(edges) -> list[list[int]]:
    return [[u, v] for u, v in edges]


def _matching_lists(matchings: Sequence[Matching]) -> list[list[list[int]]]:
    return [_edge_pairs(f.edges) for f in matchings]


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        with open(args.edges, "r", encoding="utf-8") as handle:
            return parse_edge_list(handle.read())
    text = sys.stdin.read()
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) == 1:
        try:
            return parse_graph6(lines[0].strip())
        except ParseError:
            pass
    return parse_edge_list(text)


def _write_dot(path: str | None, g: Graph, highlight=()) -> None:
    if path is None:
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(to_dot(g, highlight))


def _emit(payload: dict) -> None:
    sys.stdout.write(canonical_json(payload))


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    report = cover.analyze(g)
    _emit(
        {
            "graph6": to_graph6(g),
            "n": g.n,
            "nu": report.nu,
            "allowed": _edge_pairs(report.allowed),
            "disallowed": _edge_pairs(report.disallowed),
            "matching_covered": report.is_matching_covered,
            "minimal_matching_covered": report.is_minimal_matching_covered,
            "perfect_matching": report.has_perfect_matching,
        }
    )
    _write_dot(args.dot, g, report.disallowed)
    return EXIT_OK


def cmd_core(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    core = cover.core_subgraph(g)
    removed = tuple(e for e in g.edges if e not in core.edge_set)
    _emit(
        {
            "graph6": to_graph6(g),
            "core_graph6": to_graph6(core),
            "removed": _edge_pairs(removed),
        }
    )
    _write_dot(args.dot, g, removed)
    return EXIT_OK


def cmd_minimize(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result, initial_dropped, trace = cover.minimize_with_trace(g)
    _emit(
        {
            "graph6": to_graph6(g),
            "result_graph6": to_graph6(result),
            "dropped_before": list(initial_dropped),
            "trace": [
                {"edge": [step.edge.u, step.edge.v], "dropped_vertices": list(step.dropped)}
                for step in trace
            ],
        }
    )
    _write_dot(args.dot, result)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    ws = cover.theorem_witness_sequence(g)
    shared = cover.shared_matching_set(g, ws)
    _emit(
        {
            "graph6": to_graph6(g),
            "sequence": _edge_pairs(ws.edges),
            "repeat_i": ws.repeat_i,
            "repeat_j": ws.repeat_j,
            "pair": _edge_pairs(ws.pair),
            "shared_matchings": _matching_lists(shared),
        }
    )
    _write_dot(args.dot, g, ws.pair)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    properties = tuple(p.strip() for p in args.properties.split(",") if p.strip())
    if args.ingest is not None:
        if args.exhaustive or args.random:
            raise ValueError("--ingest cannot be combined with --exhaustive/--random")
        with open(args.ingest, "r", encoding="utf-8") as handle:
            graphs = list(sweep_mod.ingest_graph6_stream(handle))
        report = sweep_mod.sweep_graphs(graphs, properties, jobs=args.jobs)
    else:
        if args.exhaustive == args.random:
            raise ValueError("choose exactly one of --exhaustive or --random")
        if args.exhaustive:
            cfg = sweep_mod.SweepConfig(
                mode=sweep_mod.EXHAUSTIVE_MODE,
                properties=properties,
                max_n=args.max_n,
                jobs=args.jobs,
            )
        else:
            cfg = sweep_mod.SweepConfig(
                mode=sweep_mod.RANDOM_MODE,
                properties=properties,
                n=args.n,
                edge_probability=args.p,
                sample_count=args.samples,
                seed=args.seed,
                jobs=args.jobs,
            )
        report = sweep_mod.run_sweep(cfg)
    _emit(report.to_payload())
    if report.total_failures:
        prop, code = report.first_counterexample
        print(
            f"counterexample found: property {prop} fails on {code}",
            file=sys.stderr,
        )
        return EXIT_REFUTED
    return EXIT_OK


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph6", help="graph6 code of the input graph")
    parser.add_argument("--edges", help="path to an edge-list file ('n' then 'u v' lines)")
    parser.add_argument("--dot", help="write a DOT rendering to this path")
    parser.add_argument(
        "--json",
        action="store_true",
        default=True,
        help="emit JSON on stdout (default; kept for pipeline compatibility)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchcover",
        description=(
            "Analyze allowed edges and matching covered structure of small "
            "graphs, and sweep graph populations for property counterexamples."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="allowed/disallowed edges and covered predicates")
    _add_graph_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("core", help="the subgraph of allowed edges")
    _add_graph_input(p)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("minimize", help="delete edges while the graph stays matching covered")
    _add_graph_input(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("witness", help="edge sequence exhibiting two edges with equal matching sets")
    _add_graph_input(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sweep", help="falsification sweep over a graph population")
    p.add_argument("--exhaustive", action="store_true", help="all labeled graphs with n <= --max-n")
    p.add_argument("--random", action="store_true", help="seeded random graphs")
    p.add_argument("--ingest", help="path to a newline-delimited graph6 stream")
    p.add_argument("--max-n", type=int, default=None, help="exhaustive mode size bound")
    p.add_argument("--n", type=int, default=None, help="random mode vertex count")
    p.add_argument("--p", type=float, default=None, help="random mode edge probability")
    p.add_argument("--samples", type=int, default=None, help="random mode sample count")
    p.add_argument("--seed", type=int, default=0, help="random mode base seed")
    p.add_argument(
        "--properties",
        default=",".join(sweep_mod.PROPERTY_NAMES),
        help="comma-separated subset of: " + ", ".join(sweep_mod.PROPERTY_NAMES),
    )
    p.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes (default: available processors)",
    )
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RefutationError as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
