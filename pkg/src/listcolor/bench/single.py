"""One-shot solver run on instance files, with a machine-readable report."""

from __future__ import annotations

import time
from pathlib import Path

from ..bb import dcc_solve, elc_solve
from ..bb.solve import Limits
from ..errors import ConfigError
from ..graph import parse_dimacs
from ..greedy_list import kgl_solve
from ..instance import parse_instance, validate_coloring
from ..mis_heuristic import lc_solve
from ..oracle import brute_force_opt
from ..outcome import TIMEOUT


def run_single(
    graph_path: str | None,
    lists_path: str,
    solver: str,
    limits: Limits | None = None,
    seed: int = 0,
    include_timing: bool = True,
) -> dict:
    """Parse the instance, run one solver, revalidate any coloring, and
    return a JSON-ready report. With include_timing=False the report omits
    elapsed_ms, making repeat runs byte-identical."""
    limits = limits or Limits()
    graph = (
        parse_dimacs(Path(graph_path).read_text()) if graph_path is not None else None
    )
    inst = parse_instance(Path(lists_path).read_text(), graph=graph)

    t0 = time.perf_counter()
    if solver == "kgl":
        out = kgl_solve(inst, seed)
    elif solver == "lc":
        out = lc_solve(inst)
    elif solver == "elc":
        out = elc_solve(inst, limits)
    elif solver == "dcc":
        out = dcc_solve(inst, limits)
    elif solver == "oracle":
        out = brute_force_opt(inst).to_outcome()
    else:
        raise ConfigError(f"unknown solver {solver!r}")
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))

    valid = None
    if out.coloring is not None:
        valid = validate_coloring(
            inst, out.coloring, require_total=(out.status != TIMEOUT)
        ).ok
    report = {
        "solver": solver,
        "n": inst.n,
        "seed": seed,
        "status": out.status,
        "colors": out.colors,
        "valid": valid,
        "nodes": out.nodes if solver in ("elc", "dcc", "oracle") else None,
    }
    if include_timing:
        report["elapsed_ms"] = elapsed_ms
    return report
