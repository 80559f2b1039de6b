"""Benchmark harness: experiment grids, single runs, CSV summaries, CLI."""

from .grid import (
    CellResult,
    ExperimentGrid,
    GridResult,
    SolverRecord,
    desk_profile,
    full_profile,
    render_table,
    run_grid,
    to_csv,
)
from .single import run_single
from .summarize import (
    Summary,
    TrendCheck,
    parse_csv,
    render_summary,
    summarize_csv,
    summarize_rows,
)

__all__ = [
    "CellResult",
    "ExperimentGrid",
    "GridResult",
    "SolverRecord",
    "Summary",
    "TrendCheck",
    "desk_profile",
    "full_profile",
    "parse_csv",
    "render_summary",
    "render_table",
    "run_grid",
    "run_single",
    "summarize_csv",
    "summarize_rows",
    "to_csv",
]
