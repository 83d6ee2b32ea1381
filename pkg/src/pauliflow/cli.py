"""Command-line interface.

Results are emitted as canonical JSON documents on stdout (the
``matrices`` subcommand prints labelled bit grids and ``bench`` prints
CSV instead).  Exit codes: 0 = flow found / verification passed,
3 = no flow / verification failed, 2 = invalid input, 1 = I/O or
internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .analysis import focused_sets_basis, reverse_graph
from .demand import flow_demand_matrix, order_demand_matrix
from .documents import (
    DocumentError,
    check_report_document,
    export_dot,
    flow_result_document,
    parse_flow,
    parse_graph,
    serialize_graph,
)
from .finder import find_flow
from .flow import OrderRelation, check_pauli_flow
from .instances import random_instance
from .open_graph import InvalidGraphError
from .oracle import OracleLimits, brute_force_find

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_NEGATIVE = 3


def _emit(document: dict) -> None:
    sys.stdout.write(json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n")


def _load_graph(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _cmd_find(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    result = find_flow(graph, want_closure=args.closure)
    document = flow_result_document(result)
    _emit(document)
    if args.out:
        Path(args.out).write_text(
            json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n",
            encoding="utf-8",
        )
    if args.dot and result.found:
        Path(args.dot).write_text(export_dot(result.relation), encoding="utf-8")
    return EXIT_OK if result.found else EXIT_NEGATIVE


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    flow_doc = parse_flow(Path(args.flow).read_text(encoding="utf-8"))
    if flow_doc.status != "flow":
        raise DocumentError("document does not contain a flow witness", "$.status")
    order = OrderRelation.from_edges(graph.measured, flow_doc.order_edges)
    report = check_pauli_flow(
        graph, flow_doc.correction, order, require_focused=args.focused
    )
    _emit(check_report_document(report))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _cmd_matrices(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    sys.stdout.write(flow_demand_matrix(graph).to_grid("M") + "\n\n")
    sys.stdout.write(order_demand_matrix(graph).to_grid("N") + "\n")
    return EXIT_OK


def _cmd_reverse(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    sys.stdout.write(serialize_graph(reverse_graph(graph)))
    return EXIT_OK


def _cmd_focused_sets(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    _emit({"sets": [sorted(s) for s in focused_sets_basis(graph)]})
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    limits = OracleLimits(max_orders=args.budget, max_subsets=args.subsets)
    result = brute_force_find(graph, limits)
    document = {"status": result.status}
    if result.found:
        document["correction"] = {v: sorted(s) for v, s in result.correction.items()}
        document["order_edges"] = sorted([u, v] for u, v in result.order.edges)
    _emit(document)
    if result.status == "flow":
        return EXIT_OK
    if result.status == "no_flow":
        return EXIT_NEGATIVE
    return EXIT_INTERNAL


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(part) for part in args.n.split(",") if part]
    except ValueError as exc:
        raise DocumentError(f"bad size list {args.n!r}", "--n") from exc
    sys.stdout.write("n,n_i,n_o,seed,wall_time_ms,verdict\n")
    for index, n in enumerate(sizes):
        seed = args.seed + index
        graph = random_instance(n, args.io, args.io, seed, args.edge_prob)
        for _ in range(args.repeats):
            start = time.perf_counter()
            result = find_flow(graph)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            verdict = "flow" if result.found else result.reason.value
            sys.stdout.write(f"{n},{args.io},{args.io},{seed},{elapsed_ms:.3f},{verdict}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauliflow",
        description="Decide Pauli-flow existence for labelled open graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_find = sub.add_parser("find", help="find a focused flow or report why none exists")
    p_find.add_argument("graph")
    p_find.add_argument("--closure", action="store_true", help="include the transitive closure")
    p_find.add_argument("--dot", metavar="PATH", help="write the order DAG as DOT")
    p_find.add_argument("--out", metavar="PATH", help="also write the document to a file")
    p_find.set_defaults(handler=_cmd_find)

    p_verify = sub.add_parser("verify", help="check a flow document against its graph")
    p_verify.add_argument("graph")
    p_verify.add_argument("flow")
    p_verify.add_argument("--focused", action="store_true", help="also require F1-F3")
    p_verify.set_defaults(handler=_cmd_verify)

    p_matrices = sub.add_parser("matrices", help="print the two demand matrices")
    p_matrices.add_argument("graph")
    p_matrices.set_defaults(handler=_cmd_matrices)

    p_reverse = sub.add_parser("reverse", help="swap inputs and outputs")
    p_reverse.add_argument("graph")
    p_reverse.set_defaults(handler=_cmd_reverse)

    p_focused = sub.add_parser("focused-sets", help="basis of the focused-set space")
    p_focused.add_argument("graph")
    p_focused.set_defaults(handler=_cmd_focused_sets)

    p_oracle = sub.add_parser("oracle", help="brute-force decision for small graphs")
    p_oracle.add_argument("graph")
    p_oracle.add_argument("--budget", type=int, default=40320, help="max total orders")
    p_oracle.add_argument("--subsets", type=int, default=128, help="max correction sets per vertex")
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="time the finder on random instances (CSV)")
    p_bench.add_argument("--n", required=True, help="comma-separated vertex counts")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--io", type=int, default=10, help="input and output count")
    p_bench.add_argument("--edge-prob", type=float, default=0.5)
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.handler(args)
    except (DocumentError, InvalidGraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
