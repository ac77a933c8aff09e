"""Command-line front end: decompose, simulate, verify, info.

stdout carries machine-readable results only; diagnostics go to stderr.
Exit codes: 0 success, 2 parse error, 3 disconnected graph, 4 dimension
mismatch, 5 schedule/graph mismatch, 6 non-local factor, 7 verification
failure.
"""

from __future__ import annotations

import argparse
import sys

from .elimination import decompose, factor_count_bound
from .errors import (
    DimensionMismatchError,
    DisconnectedGraphError,
    IndexRangeError,
    NonLocalFactorError,
    NonSquareError,
    ParseError,
    ScheduleGraphMismatchError,
    SelfLoopError,
)
from .graph import graph_to_dot, load_graph
from .matrices import format_scalar, load_matrix, load_vector
from .optimize import optimize_schedule
from .schedule import load_schedule, save_schedule
from .simulate import check_schedule, simulate, trace_to_json

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_DIMENSION = 4
EXIT_GRAPH_MISMATCH = 5
EXIT_NONLOCAL = 6
EXIT_VERIFY = 7

_PARSE_ERRORS = (ParseError, SelfLoopError, IndexRangeError, NonSquareError, OSError)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _require_connected(g) -> None:
    missing = g.first_unreachable()
    if missing is not None:
        raise DisconnectedGraphError(
            f"graph is disconnected: node {missing} unreachable from node 1",
            unreachable=missing,
        )


def cmd_decompose(args) -> int:
    g = load_graph(args.graph)
    matrix = load_matrix(args.matrix)
    _require_connected(g)
    schedule = decompose(matrix, g)
    if args.optimize:
        schedule, _ = optimize_schedule(schedule, g)
    save_schedule(schedule, args.output)
    stats = schedule.stats
    bound = factor_count_bound(g)
    print(
        f"factors_raw={stats.raw} factors_lifted={stats.lifted} "
        f"factors_optimized={stats.optimized} bound={bound}"
    )
    return EXIT_OK


def cmd_simulate(args) -> int:
    schedule = load_schedule(args.schedule)
    g = load_graph(args.graph)
    x = load_vector(args.vector)
    if schedule.graph != g:
        raise ScheduleGraphMismatchError(
            f"schedule targets graph {schedule.graph_id}, file has {g.checksum()}"
        )
    if len(x) != g.n:
        raise DimensionMismatchError(f"signal of length {len(x)} with a {g.n}-node graph")
    y, trace = simulate(schedule, g, x, mode=args.mode)
    for v in y:
        print(format_scalar(v) if args.mode == "exact" else repr(v))
    print(f"rounds={trace.rounds} messages={trace.total_messages}")
    if args.trace:
        print(trace_to_json(trace, include_values=args.trace_values))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    matrix = load_matrix(args.matrix)
    schedule = load_schedule(args.schedule)
    if len(matrix) != g.n:
        raise DimensionMismatchError(f"{len(matrix)}x{len(matrix)} matrix with a {g.n}-node graph")
    if schedule.n != g.n:
        raise DimensionMismatchError(f"schedule for n={schedule.n} with a {g.n}-node graph")
    failure = check_schedule(schedule, g, matrix, trials=args.trials, seed=args.seed)
    if failure is not None:
        print(f"FAIL: {failure}")
        return EXIT_VERIFY
    print("OK")
    return EXIT_OK


def cmd_info(args) -> int:
    g = load_graph(args.graph)
    if args.dot:
        sys.stdout.write(graph_to_dot(g))
        return EXIT_OK
    connected = g.is_connected()
    line = f"n={g.n} edges={len(g.edges)} connected={'true' if connected else 'false'}"
    if connected:
        line += f" diameter={g.diameter()} bound={factor_count_bound(g)}"
    print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distfilter",
        description="Compile graph filters into one-hop factor schedules and simulate them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="factor a filter matrix into a schedule")
    p.add_argument("graph", help="graph file")
    p.add_argument("matrix", help="filter matrix file")
    p.add_argument("output", help="schedule JSON output path")
    p.add_argument("--optimize", dest="optimize", action="store_true", default=True)
    p.add_argument("--no-optimize", dest="optimize", action="store_false")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("simulate", help="run a schedule on a signal vector")
    p.add_argument("schedule", help="schedule JSON file")
    p.add_argument("graph", help="graph file")
    p.add_argument("vector", help="signal vector file")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--trace", action="store_true", help="print a JSON round trace")
    p.add_argument(
        "--trace-values", action="store_true", help="include per-round values in the trace"
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check a schedule against a filter matrix")
    p.add_argument("graph", help="graph file")
    p.add_argument("matrix", help="filter matrix file")
    p.add_argument("schedule", help="schedule JSON file")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="print graph facts")
    p.add_argument("graph", help="graph file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz text instead")
    p.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _PARSE_ERRORS as exc:
        return _fail(EXIT_PARSE, str(exc))
    except DisconnectedGraphError as exc:
        return _fail(EXIT_DISCONNECTED, str(exc))
    except DimensionMismatchError as exc:
        return _fail(EXIT_DIMENSION, str(exc))
    except ScheduleGraphMismatchError as exc:
        return _fail(EXIT_GRAPH_MISMATCH, str(exc))
    except NonLocalFactorError as exc:
        return _fail(EXIT_NONLOCAL, str(exc))


if __name__ == "__main__":
    sys.exit(main())
