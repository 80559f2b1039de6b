"""Experiment grid runner.

Generates seeded random instances over a (size, density, color factor, list
length) grid, dispatches the selected solvers per instance under shared
limits, and renders results both as CSV records (one per cell and solver)
and as a text table using the conventions: a plain value, `n/s` for proven
infeasibility, blank for no solution found, and `X_n` for the best value X
held at timeout.
"""

from __future__ import annotations

import io
import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from ..bb import dcc_solve, elc_solve
from ..bb.solve import Limits
from ..errors import ConfigError
from ..greedy_list import kgl_multi
from ..instance import GenConfig, gen_instance, validate_coloring
from ..mis_heuristic import lc_solve
from ..oracle import brute_force_opt
from ..outcome import (
    FEASIBLE,
    HEURFAIL,
    INFEASIBLE,
    OPTIMAL,
    TIMEOUT,
    SolveOutcome,
)
from ..seeding import mix_seed

SOLVER_NAMES = ("kgl", "lc", "elc", "dcc", "oracle")
DEFAULT_SOLVERS = ("kgl", "lc", "elc", "dcc")

# The reference column is filled by the oracle whenever the instance is
# small enough, even when "oracle" is not among the selected solvers.
ORACLE_AUTO_MAX_N = 14

CSV_COLUMNS = (
    "n",
    "d_target",
    "d_realized",
    "c",
    "k",
    "instance_seed",
    "solver",
    "status",
    "colors",
    "elapsed_ms",
    "nodes",
    "runs",
    "successes",
    "mean",
    "std",
)


@dataclass(frozen=True)
class ExperimentGrid:
    sizes: tuple[int, ...] = (50, 100, 150, 200)
    densities: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5)
    color_factors: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5)
    list_lengths: tuple[int, ...] = (3, 4, 5)
    instances_per_cell: int = 10
    master_seed: int = 0
    solvers: tuple[str, ...] = DEFAULT_SOLVERS
    limits: Limits = field(default_factory=Limits)
    kgl_runs: int = 10
    workers: int = 1

    def __post_init__(self):
        for s in self.solvers:
            if s not in SOLVER_NAMES:
                raise ConfigError(f"unknown solver {s!r}")
        if not self.solvers:
            raise ConfigError("no solvers selected")
        if self.instances_per_cell < 1:
            raise ConfigError("instances_per_cell must be >= 1")
        if self.kgl_runs < 1:
            raise ConfigError("kgl_runs must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


def desk_profile(**overrides) -> ExperimentGrid:
    """Desk-scale defaults: small sizes, 30 s wall clock per solver call."""
    base = ExperimentGrid(
        sizes=(20, 35, 50),
        limits=Limits(wall_clock_seconds=30.0),
    )
    return replace(base, **overrides) if overrides else base


def full_profile(**overrides) -> ExperimentGrid:
    """Full-scale defaults: sizes up to 200, 1800 s wall clock."""
    base = ExperimentGrid()
    return replace(base, **overrides) if overrides else base


@dataclass(frozen=True)
class SolverRecord:
    solver: str
    status: str
    colors: int | None
    elapsed_ms: int
    nodes: int | None = None
    runs: int | None = None
    successes: int | None = None
    mean: float | None = None
    std: float | None = None


@dataclass(frozen=True)
class CellResult:
    n: int
    d_target: float
    d_realized: float
    c: float
    k: int
    instance_seed: int
    chi: str
    records: tuple[SolverRecord, ...]


@dataclass(frozen=True)
class SkippedCell:
    n: int
    d_target: float
    c: float
    k: int
    index: int
    reason: str


@dataclass(frozen=True)
class GridResult:
    grid: ExperimentGrid
    cells: tuple[CellResult, ...]
    skipped: tuple[SkippedCell, ...]


def _checked(inst, outcome: SolveOutcome, solver: str) -> None:
    if outcome.coloring is None:
        return
    report = validate_coloring(
        inst, outcome.coloring, require_total=(outcome.status != TIMEOUT)
    )
    if not report.ok:
        raise RuntimeError(f"{solver} returned an invalid coloring: {report}")


def _run_solver(solver: str, inst, seed: int, limits: Limits, kgl_runs: int) -> SolverRecord:
    t0 = time.perf_counter()
    if solver == "kgl":
        stats = kgl_multi(inst, runs=kgl_runs, seed=seed)
        elapsed = int(round((time.perf_counter() - t0) * 1000))
        for out in stats.per_run:
            _checked(inst, out, "kgl")
        return SolverRecord(
            solver="kgl",
            status=FEASIBLE if stats.successes else HEURFAIL,
            colors=stats.best_colors,
            elapsed_ms=elapsed,
            runs=stats.runs,
            successes=stats.successes,
            mean=stats.mean_colors,
            std=stats.std_colors,
        )
    if solver == "lc":
        out = lc_solve(inst)
        elapsed = int(round((time.perf_counter() - t0) * 1000))
        _checked(inst, out, "lc")
        return SolverRecord(
            solver="lc", status=out.status, colors=out.colors, elapsed_ms=elapsed
        )
    if solver == "elc":
        out = elc_solve(inst, limits)
    elif solver == "dcc":
        out = dcc_solve(inst, limits)
    elif solver == "oracle":
        out = brute_force_opt(inst).to_outcome()
    else:
        raise ConfigError(f"unknown solver {solver!r}")
    elapsed = int(round((time.perf_counter() - t0) * 1000))
    _checked(inst, out, solver)
    return SolverRecord(
        solver=solver,
        status=out.status,
        colors=out.colors,
        elapsed_ms=elapsed,
        nodes=out.nodes,
    )


def _chi_column(records: dict[str, SolverRecord]) -> str:
    oracle = records.get("oracle")
    if oracle is not None:
        if oracle.status == OPTIMAL:
            return str(oracle.colors)
        return "n/s"
    for solver in ("elc", "dcc"):
        rec = records.get(solver)
        if rec is not None and rec.status == OPTIMAL:
            return str(rec.colors)
        if rec is not None and rec.status == INFEASIBLE:
            return "n/s"
    return "?"


def _cell_job(args) -> CellResult | SkippedCell:
    grid, n, d, idx, c, k = args
    instance_seed = mix_seed(grid.master_seed, "inst", n, d, idx)
    try:
        cfg = GenConfig(n=n, d=d, c=c, k=k, seed=instance_seed)
    except ConfigError as exc:
        return SkippedCell(n=n, d_target=d, c=c, k=k, index=idx, reason=str(exc))
    inst = gen_instance(cfg)

    solvers = list(grid.solvers)
    if "oracle" not in solvers and n <= ORACLE_AUTO_MAX_N:
        solvers.append("oracle")
    records: dict[str, SolverRecord] = {}
    for solver in solvers:
        records[solver] = _run_solver(
            solver,
            inst,
            seed=mix_seed(instance_seed, "kgl"),
            limits=grid.limits,
            kgl_runs=grid.kgl_runs,
        )
    ordered = tuple(records[s] for s in solvers)
    return CellResult(
        n=n,
        d_target=d,
        d_realized=inst.graph.density(),
        c=c,
        k=k,
        instance_seed=instance_seed,
        chi=_chi_column(records),
        records=ordered,
    )


def _cell_args(grid: ExperimentGrid):
    for n in grid.sizes:
        for d in grid.densities:
            for idx in range(grid.instances_per_cell):
                for c in grid.color_factors:
                    for k in grid.list_lengths:
                        yield (grid, n, d, idx, c, k)


def run_grid(grid: ExperimentGrid) -> GridResult:
    """Run every cell; results come back in deterministic grid order
    regardless of worker completion order."""
    args = list(_cell_args(grid))
    if grid.workers > 1:
        with ProcessPoolExecutor(max_workers=grid.workers) as pool:
            results = list(pool.map(_cell_job, args))
    else:
        results = [_cell_job(a) for a in args]
    cells = tuple(r for r in results if isinstance(r, CellResult))
    skipped = tuple(r for r in results if isinstance(r, SkippedCell))
    return GridResult(grid=grid, cells=cells, skipped=skipped)


def _fmt(x, spec: str = "") -> str:
    if x is None:
        return ""
    return format(x, spec) if spec else str(x)


def csv_rows(result: GridResult) -> list[dict[str, str]]:
    rows = []
    for cell in result.cells:
        for rec in cell.records:
            rows.append(
                {
                    "n": str(cell.n),
                    "d_target": str(cell.d_target),
                    "d_realized": f"{cell.d_realized:.6f}",
                    "c": str(cell.c),
                    "k": str(cell.k),
                    "instance_seed": str(cell.instance_seed),
                    "solver": rec.solver,
                    "status": rec.status,
                    "colors": _fmt(rec.colors),
                    "elapsed_ms": _fmt(rec.elapsed_ms),
                    "nodes": _fmt(rec.nodes),
                    "runs": _fmt(rec.runs),
                    "successes": _fmt(rec.successes),
                    "mean": _fmt(rec.mean, ".4f"),
                    "std": _fmt(rec.std, ".4f"),
                }
            )
    return rows


def to_csv(result: GridResult) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(csv_rows(result))
    return buf.getvalue()


def render_record(rec: SolverRecord) -> str:
    """One table cell under the conventions: value, n/s, blank, X_n."""
    if rec.solver == "kgl":
        if rec.mean is None:
            return ""
        return f"{rec.mean:.1f}({rec.std:.1f})"
    if rec.status == INFEASIBLE:
        return "n/s"
    if rec.status == TIMEOUT:
        return f"{rec.colors}_n" if rec.colors is not None else ""
    if rec.colors is not None:
        return str(rec.colors)
    return ""


def render_table(result: GridResult) -> str:
    solvers = list(result.grid.solvers)
    header = ["n", "d", "c", "k", "seed", "chi"] + solvers
    rows = [header]
    for cell in result.cells:
        by_name = {r.solver: r for r in cell.records}
        rows.append(
            [
                str(cell.n),
                str(cell.d_target),
                str(cell.c),
                str(cell.k),
                str(cell.instance_seed),
                cell.chi,
            ]
            + [render_record(by_name[s]) for s in solvers]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(val.ljust(widths[i]) for i, val in enumerate(row)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"
