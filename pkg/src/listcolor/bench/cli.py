"""Command line interface.

Subcommands: gen (write one instance file), solve (one solver run, JSON
report), bench (experiment grid -> table/CSV), summarize (aggregate CSVs).
Exit codes: 0 success, 1 usage or config error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from ..bb.solve import Limits
from ..errors import ConfigError, GraphInputError, ParseError
from ..instance import GenConfig, gen_instance, serialize_instance
from .grid import (
    SOLVER_NAMES,
    desk_profile,
    full_profile,
    render_table,
    run_grid,
    to_csv,
)
from .single import run_single
from .summarize import render_summary, summarize_csv


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _limits_from(args) -> Limits:
    cap = args.iteration_cap
    wall = args.time_limit_s
    return Limits(
        iteration_cap=None if cap is not None and cap <= 0 else cap or 5000,
        wall_clock_seconds=None if wall is not None and wall <= 0 else wall or 1800.0,
    )


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def build_parser() -> _Parser:
    parser = _Parser(prog="listcolor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="write one generated instance file")
    p_gen.add_argument("--sizes", type=int, required=True, metavar="N")
    p_gen.add_argument("--densities", type=float, required=True, metavar="D")
    p_gen.add_argument("--color-factors", type=float, required=True, metavar="C")
    p_gen.add_argument("--list-lengths", type=int, required=True, metavar="K")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="output path (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_solve = sub.add_parser("solve", help="run one solver on instance files")
    p_solve.add_argument("--graph", default=None, help="DIMACS .col file")
    p_solve.add_argument(
        "--lists", required=True, help="list file (may embed e lines)"
    )
    p_solve.add_argument("--solver", required=True, choices=SOLVER_NAMES)
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--time-limit-s", type=float, default=None,
                         help="wall clock limit; <= 0 disables")
    p_solve.add_argument("--iteration-cap", type=int, default=None,
                         help="per-restart cap; <= 0 disables")
    p_solve.add_argument("--no-timing", action="store_true",
                         help="omit elapsed_ms for byte-identical reports")
    p_solve.add_argument("--out", default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_bench = sub.add_parser("bench", help="run an experiment grid")
    p_bench.add_argument("--profile", choices=("desk", "full"), default="desk")
    p_bench.add_argument("--sizes", type=int, nargs="+", default=None)
    p_bench.add_argument("--densities", type=float, nargs="+", default=None)
    p_bench.add_argument("--color-factors", type=float, nargs="+", default=None)
    p_bench.add_argument("--list-lengths", type=int, nargs="+", default=None)
    p_bench.add_argument("--instances-per-cell", type=int, default=None)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--solvers", default=None,
                         help="comma-separated subset of " + ",".join(SOLVER_NAMES))
    p_bench.add_argument("--time-limit-s", type=float, default=None)
    p_bench.add_argument("--iteration-cap", type=int, default=None)
    p_bench.add_argument("--kgl-runs", type=int, default=None)
    p_bench.add_argument("--workers", type=int, default=None)
    p_bench.add_argument("--out-csv", default=None)
    p_bench.add_argument("--out-table", default=None)
    p_bench.set_defaults(func=_cmd_bench)

    p_sum = sub.add_parser("summarize", help="aggregate benchmark CSVs")
    p_sum.add_argument("csvs", nargs="+", help="CSV files from bench")
    p_sum.add_argument("--out", default=None)
    p_sum.set_defaults(func=_cmd_summarize)

    return parser


def _cmd_gen(args) -> int:
    cfg = GenConfig(
        n=args.sizes,
        d=args.densities,
        c=args.color_factors,
        k=args.list_lengths,
        seed=args.seed,
    )
    inst = gen_instance(cfg)
    _write_out(serialize_instance(inst), args.out)
    return 0


def _cmd_solve(args) -> int:
    report = run_single(
        graph_path=args.graph,
        lists_path=args.lists,
        solver=args.solver,
        limits=_limits_from(args),
        seed=args.seed,
        include_timing=not args.no_timing,
    )
    _write_out(json.dumps(report, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _cmd_bench(args) -> int:
    grid = desk_profile() if args.profile == "desk" else full_profile()
    overrides = {}
    if args.sizes is not None:
        overrides["sizes"] = tuple(args.sizes)
    if args.densities is not None:
        overrides["densities"] = tuple(args.densities)
    if args.color_factors is not None:
        overrides["color_factors"] = tuple(args.color_factors)
    if args.list_lengths is not None:
        overrides["list_lengths"] = tuple(args.list_lengths)
    if args.instances_per_cell is not None:
        overrides["instances_per_cell"] = args.instances_per_cell
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.solvers is not None:
        overrides["solvers"] = tuple(
            s.strip() for s in args.solvers.split(",") if s.strip()
        )
    if args.kgl_runs is not None:
        overrides["kgl_runs"] = args.kgl_runs
    if args.workers is not None:
        overrides["workers"] = args.workers
    limits = grid.limits
    if args.time_limit_s is not None:
        limits = replace(
            limits,
            wall_clock_seconds=None if args.time_limit_s <= 0 else args.time_limit_s,
        )
    if args.iteration_cap is not None:
        limits = replace(
            limits,
            iteration_cap=None if args.iteration_cap <= 0 else args.iteration_cap,
        )
    overrides["limits"] = limits
    grid = replace(grid, **overrides)

    result = run_grid(grid)
    for skip in result.skipped:
        print(
            f"skipped cell n={skip.n} d={skip.d_target} c={skip.c} "
            f"k={skip.k} i={skip.index}: {skip.reason}",
            file=sys.stderr,
        )
    if args.out_csv is not None:
        _write_out(to_csv(result), args.out_csv)
    table = render_table(result)
    if args.out_table is not None:
        _write_out(table, args.out_table)
        print(
            f"{len(result.cells)} cells, {len(result.skipped)} skipped",
            file=sys.stderr,
        )
    else:
        sys.stdout.write(table)
    return 0


def _cmd_summarize(args) -> int:
    texts = []
    for path in args.csvs:
        with open(path) as fh:
            texts.append(fh.read())
    summary = summarize_csv(texts)
    _write_out(render_summary(summary), args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, GraphInputError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
