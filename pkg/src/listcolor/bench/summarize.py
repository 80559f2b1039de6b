"""Aggregate benchmark CSVs into per-configuration stats and trend checks.

Metrics per (n, d, c, k) aggregate: mean best colors (the minimum colors any
solver achieved per instance), per-solver success rates, and median search
nodes for the branch-and-bound solvers, both restricted to instances where
some solver produced a feasible coloring. Trend checks compare adjacent
aggregates along one axis with the others fixed and report the fraction of
pairs satisfying the expected direction.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from statistics import median

from ..errors import ParseError
from ..outcome import FEASIBLE, OPTIMAL

_EPS = 1e-9

_INT_FIELDS = ("n", "k", "instance_seed")
_FLOAT_FIELDS = ("d_target", "c")
_OPT_INT_FIELDS = ("colors", "elapsed_ms", "nodes", "runs", "successes")
_OPT_FLOAT_FIELDS = ("d_realized", "mean", "std")
_REQUIRED = set(_INT_FIELDS) | set(_FLOAT_FIELDS) | {"solver", "status"}


def parse_csv(text: str) -> list[dict]:
    """Typed benchmark records; raises ParseError with the record number."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise ParseError("empty CSV")
    missing = _REQUIRED - set(reader.fieldnames)
    if missing:
        raise ParseError(f"missing columns: {', '.join(sorted(missing))}")
    rows = []
    for i, raw in enumerate(reader, start=1):
        row: dict = {}
        try:
            for f in _INT_FIELDS:
                row[f] = int(raw[f])
            for f in _FLOAT_FIELDS:
                row[f] = float(raw[f])
            for f in _OPT_INT_FIELDS:
                val = raw.get(f) or ""
                row[f] = int(val) if val else None
            for f in _OPT_FLOAT_FIELDS:
                val = raw.get(f) or ""
                row[f] = float(val) if val else None
            row["solver"] = raw["solver"]
            row["status"] = raw["status"]
            if None in raw.values() or None in raw:
                raise ValueError("field count mismatch")
        except (TypeError, ValueError, KeyError) as exc:
            raise ParseError(f"record {i}: bad value ({exc})") from None
        rows.append(row)
    return rows


@dataclass(frozen=True)
class TrendCheck:
    name: str
    direction: str  # "non-increasing" | "non-decreasing"
    holds: int
    pairs: int

    @property
    def fraction(self) -> float | None:
        return self.holds / self.pairs if self.pairs else None


@dataclass(frozen=True)
class Summary:
    aggregates: dict
    solver_success: dict
    lc_success_by_c: dict
    head_to_head: dict
    trends: dict


def _cell_key(row: dict) -> tuple:
    return (row["n"], row["d_target"], row["c"], row["k"], row["instance_seed"])


def _agg_key(row: dict) -> tuple:
    return (row["n"], row["d_target"], row["c"], row["k"])


def summarize_rows(rows: list[dict]) -> Summary:
    cells: dict[tuple, dict[str, dict]] = {}
    for row in rows:
        cells.setdefault(_cell_key(row), {})[row["solver"]] = row

    solver_success: dict[str, list[int]] = {}
    lc_by_c: dict[float, list[int]] = {}
    for row in rows:
        succ = row["status"] in (OPTIMAL, FEASIBLE)
        tally = solver_success.setdefault(row["solver"], [0, 0])
        tally[0] += int(succ)
        tally[1] += 1
        if row["solver"] == "lc":
            tally = lc_by_c.setdefault(row["c"], [0, 0])
            tally[0] += int(succ)
            tally[1] += 1

    h2h = {
        "comparable_pairs": 0,
        "dcc_better": 0,
        "ties": 0,
        "elc_better": 0,
        "dominance_violations": 0,
        "elc_value_only": 0,
        "dcc_value_only": 0,
    }
    completed = (OPTIMAL, FEASIBLE)
    for recs in cells.values():
        elc, dcc = recs.get("elc"), recs.get("dcc")
        if elc is None or dcc is None:
            continue
        ev, dv = elc["colors"], dcc["colors"]
        if elc["status"] in completed and dcc["status"] in completed:
            if ev is not None and dv is not None:
                h2h["comparable_pairs"] += 1
                if dv < ev:
                    h2h["dcc_better"] += 1
                elif dv == ev:
                    h2h["ties"] += 1
                else:
                    h2h["elc_better"] += 1
                    h2h["dominance_violations"] += 1
        if ev is not None and dv is None:
            h2h["elc_value_only"] += 1
        if dv is not None and ev is None:
            h2h["dcc_value_only"] += 1

    agg_values: dict[tuple, list[int]] = {}
    agg_elc_nodes: dict[tuple, list[int]] = {}
    agg_dcc_nodes: dict[tuple, list[int]] = {}
    agg_cells: dict[tuple, int] = {}
    for key, recs in cells.items():
        akey = key[:4]
        agg_cells[akey] = agg_cells.get(akey, 0) + 1
        values = [r["colors"] for r in recs.values() if r["colors"] is not None]
        if not values:
            # Node medians cover colorable instances only: search effort on
            # instances with no feasible coloring collapses early and would
            # swamp the runtime-vs-density signal.
            continue
        agg_values.setdefault(akey, []).append(min(values))
        if "elc" in recs and recs["elc"]["nodes"] is not None:
            agg_elc_nodes.setdefault(akey, []).append(recs["elc"]["nodes"])
        if "dcc" in recs and recs["dcc"]["nodes"] is not None:
            agg_dcc_nodes.setdefault(akey, []).append(recs["dcc"]["nodes"])

    aggregates = {}
    for akey in sorted(agg_cells):
        vals = agg_values.get(akey, [])
        aggregates[akey] = {
            "cells": agg_cells[akey],
            "valued_cells": len(vals),
            "mean_colors": sum(vals) / len(vals) if vals else None,
            "median_elc_nodes": (
                median(agg_elc_nodes[akey]) if akey in agg_elc_nodes else None
            ),
            "median_dcc_nodes": (
                median(agg_dcc_nodes[akey]) if akey in agg_dcc_nodes else None
            ),
        }

    mean_colors = {
        k: v["mean_colors"]
        for k, v in aggregates.items()
        if v["mean_colors"] is not None
    }
    elc_nodes = {
        k: v["median_elc_nodes"]
        for k, v in aggregates.items()
        if v["median_elc_nodes"] is not None
    }
    trends = {
        "colors_vs_k": _trend("colors_vs_k", mean_colors, axis=3, increasing=False),
        "colors_vs_d": _trend("colors_vs_d", mean_colors, axis=1, increasing=True),
        "colors_vs_c": _trend("colors_vs_c", mean_colors, axis=2, increasing=True),
        "nodes_vs_d": _trend("nodes_vs_d", elc_nodes, axis=1, increasing=True),
        "nodes_vs_k": _trend("nodes_vs_k", elc_nodes, axis=3, increasing=True),
    }

    return Summary(
        aggregates=aggregates,
        solver_success={k: tuple(v) for k, v in sorted(solver_success.items())},
        lc_success_by_c={k: tuple(v) for k, v in sorted(lc_by_c.items())},
        head_to_head=h2h,
        trends=trends,
    )


def _trend(name: str, metric: dict[tuple, float], axis: int, increasing: bool) -> TrendCheck:
    groups: dict[tuple, list[tuple[float, float]]] = {}
    for key, value in metric.items():
        fixed = key[:axis] + key[axis + 1 :]
        groups.setdefault(fixed, []).append((key[axis], value))
    holds = pairs = 0
    for series in groups.values():
        series.sort()
        for (_, v1), (_, v2) in zip(series, series[1:]):
            pairs += 1
            ok = v2 >= v1 - _EPS if increasing else v2 <= v1 + _EPS
            holds += int(ok)
    direction = "non-decreasing" if increasing else "non-increasing"
    return TrendCheck(name=name, direction=direction, holds=holds, pairs=pairs)


def summarize_csv(texts: list[str]) -> Summary:
    rows: list[dict] = []
    for text in texts:
        rows.extend(parse_csv(text))
    return summarize_rows(rows)


def render_summary(s: Summary) -> str:
    out = []
    out.append("== aggregates (n, d, c, k) ==")
    for akey, agg in s.aggregates.items():
        mean = "-" if agg["mean_colors"] is None else f"{agg['mean_colors']:.2f}"
        enodes = (
            "-"
            if agg["median_elc_nodes"] is None
            else f"{agg['median_elc_nodes']:.0f}"
        )
        out.append(
            f"  n={akey[0]} d={akey[1]} c={akey[2]} k={akey[3]}: "
            f"cells={agg['cells']} mean_colors={mean} elc_nodes~{enodes}"
        )
    out.append("== solver success ==")
    for solver, (succ, total) in s.solver_success.items():
        out.append(f"  {solver}: {succ}/{total}")
    if s.lc_success_by_c:
        out.append("== lc success by color factor ==")
        for c, (succ, total) in s.lc_success_by_c.items():
            out.append(f"  c={c}: {succ}/{total}")
    h = s.head_to_head
    out.append("== elc vs dcc (completed, both valued) ==")
    out.append(
        f"  comparable={h['comparable_pairs']} dcc_better={h['dcc_better']} "
        f"ties={h['ties']} elc_better={h['elc_better']} "
        f"violations={h['dominance_violations']}"
    )
    out.append(
        f"  one-sided: elc_value_only={h['elc_value_only']} "
        f"dcc_value_only={h['dcc_value_only']}"
    )
    out.append("== trends ==")
    for t in s.trends.values():
        frac = "n/a" if t.fraction is None else f"{t.fraction:.0%}"
        out.append(f"  {t.name} ({t.direction}): {t.holds}/{t.pairs} = {frac}")
    return "\n".join(out) + "\n"
