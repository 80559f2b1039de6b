"""Exact branch-and-bound list coloring.

elc_solve grows one greedy clique, uses its size as the lower bound, and
runs one capped depth-first search per feasible clique coloring, all sharing
a single upper bound. dcc_solve grows a second clique disjoint from the
first, lower-bounds with the exact optimum of the induced two-clique
subgraph, and seeds restarts with that subgraph's feasible colorings.

Vertex selection maximizes the unavailable degree (palette colors either
off-list or on a colored neighbor), breaking ties by most uncolored
neighbors, then smallest id. Colors branch in ascending order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..graph import Graph
from ..instance import Coloring, Instance
from ..outcome import (
    FEASIBLE,
    INFEASIBLE,
    NOSOLUTION,
    OPTIMAL,
    TIMEOUT,
    SolveOutcome,
)
from . import _core_py, engine
from .problem import PackedProblem, pack

_STATUS_NAMES = {
    engine.COMPLETED: "completed",
    engine.CAPPED: "capped",
    engine.TIMED_OUT: "timed-out",
    engine.CERTIFIED: "certified",
}

_SENTINEL = object()


@dataclass(frozen=True)
class Limits:
    """Search budgets. iteration_cap is per restart (None = unlimited),
    wall_clock_seconds bounds the whole solve (None = unlimited), restarts
    caps how many initial colorings are tried (None = all)."""

    iteration_cap: int | None = 5000
    wall_clock_seconds: float | None = 1800.0
    restarts: int | None = None

    def __post_init__(self):
        if self.iteration_cap is not None and self.iteration_cap < 1:
            raise ValueError(f"iteration_cap must be >= 1, got {self.iteration_cap}")
        if self.wall_clock_seconds is not None and self.wall_clock_seconds <= 0:
            raise ValueError(
                f"wall_clock_seconds must be > 0, got {self.wall_clock_seconds}"
            )
        if self.restarts is not None and self.restarts < 0:
            raise ValueError(f"restarts must be >= 0, got {self.restarts}")


@dataclass(frozen=True)
class RestartReport:
    """Result of one search restart: status is completed, capped,
    timed-out, or certified (lower bound met, search ended early)."""

    status: str
    nodes: int
    best_count: int | None
    best: Coloring | None


def _as_map(partial) -> dict[int, int]:
    if partial is None:
        return {}
    if isinstance(partial, Coloring):
        return dict(partial.assignment)
    return dict(partial)


def unavailable_degree(inst: Instance, partial, v: int) -> int:
    """Count of palette colors unusable at uncolored v: not on its list, or
    already on a colored neighbor. Palette = union of all lists."""
    colored = _as_map(partial)
    nbr_colors = {
        colored[u] for u in inst.graph.adj[v] if u in colored
    }
    return sum(
        1
        for c in inst.palette
        if c not in inst.lists[v] or c in nbr_colors
    )


def select_next_vertex(inst: Instance, partial) -> int:
    """Uncolored vertex with maximal unavailable degree; ties by most
    uncolored neighbors, then smallest id."""
    colored = _as_map(partial)
    best_v = -1
    best_key: tuple[int, int, int] | None = None
    for v in range(inst.n):
        if v in colored:
            continue
        dua = unavailable_degree(inst, colored, v)
        du = sum(1 for u in inst.graph.adj[v] if u not in colored)
        key = (dua, du, -v)
        if best_key is None or key > best_key:
            best_key = key
            best_v = v
    if best_v < 0:
        raise ValueError("no uncolored vertex")
    return best_v


def find_clique(g: Graph) -> tuple[int, ...]:
    """Greedy clique: seed with the max-degree vertex (ties to smallest id),
    repeatedly add the common neighbor of the clique with max degree (same
    tie-break). Returns vertex ids sorted ascending."""
    if g.n < 1:
        raise ValueError("graph has no vertices")
    seed = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = [seed]
    common = set(g.adj[seed])
    while common:
        nxt = max(common, key=lambda v: (g.degree(v), -v))
        clique.append(nxt)
        common &= g.adj[nxt]
    return tuple(sorted(clique))


def enumerate_feasible_colorings(
    inst: Instance, vertices: Iterable[int]
) -> Iterator[dict[int, int]]:
    """Every proper list coloring of the given vertex set (adjacency taken
    from the full graph), lazily: vertices ascending by id, colors ascending
    within each vertex's list."""
    vs = sorted(set(vertices))
    choices = [sorted(inst.lists[v]) for v in vs]
    adj = inst.graph.adj
    partial: dict[int, int] = {}

    def rec(i: int) -> Iterator[dict[int, int]]:
        if i == len(vs):
            yield dict(partial)
            return
        v = vs[i]
        for c in choices[i]:
            if any(partial.get(u) == c for u in adj[v]):
                continue
            partial[v] = c
            yield from rec(i + 1)
            del partial[v]

    return rec(0)


def enumerate_clique_colorings(
    inst: Instance, clique: Iterable[int]
) -> Iterator[dict[int, int]]:
    """Feasible colorings of a clique (necessarily injective). Raises
    ValueError when the vertices are not pairwise adjacent."""
    vs = sorted(set(clique))
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if not inst.graph.is_edge(u, v):
                raise ValueError(f"vertices {u} and {v} are not adjacent")
    return enumerate_feasible_colorings(inst, vs)


def _run_packed(
    pp: PackedProblem,
    init: dict[int, int],
    ub: int,
    lb: int,
    cap: int,
    deadline: float,
    prune: bool,
    select: str,
) -> tuple[int, int, int, list[int] | None]:
    index_of = {color: i for i, color in enumerate(pp.palette)}
    init_vs = sorted(init)
    init_cs = [index_of[init[v]] for v in init_vs]
    kernel = _core_py.run_restart if select == "heap" else engine.run_restart
    return kernel(pp, init_vs, init_cs, ub, lb, cap, deadline, prune, select)


def _to_coloring(pp: PackedProblem, assign: list[int]) -> Coloring:
    return Coloring(
        assignment={v: pp.palette[c] for v, c in enumerate(assign) if c >= 0}
    )


def _check_initial(inst: Instance, init: dict[int, int]) -> None:
    for v, color in init.items():
        if not 0 <= v < inst.n:
            raise ValueError(f"unknown vertex {v} in initial coloring")
        if color not in inst.lists[v]:
            raise ValueError(f"color {color} is not on the list of vertex {v}")
    for v, color in init.items():
        for u in inst.graph.adj[v]:
            if init.get(u) == color:
                raise ValueError(
                    f"initial coloring conflicts on edge ({min(u, v)}, {max(u, v)})"
                )


def bb_search(
    inst: Instance,
    initial=None,
    limits: Limits = Limits(),
    ub: int | None = None,
    lb: int = 0,
    prune: bool = True,
) -> RestartReport:
    """One bounded depth-first search seeded with an initial partial
    coloring (vertex -> color, or None). Completion with best_count None
    means no coloring better than ub exists under this seed."""
    initial = _as_map(initial)
    _check_initial(inst, initial)
    pp = pack(inst)
    cap = limits.iteration_cap or 0
    deadline = (
        time.monotonic() + limits.wall_clock_seconds
        if limits.wall_clock_seconds is not None
        else float("inf")
    )
    status, nodes, best_count, best_assign = _run_packed(
        pp,
        initial,
        pp.p + 1 if ub is None else ub,
        lb,
        cap,
        deadline,
        prune,
        "scan",
    )
    return RestartReport(
        status=_STATUS_NAMES[status],
        nodes=int(nodes),
        best_count=best_count if best_count >= 0 else None,
        best=_to_coloring(pp, best_assign) if best_assign is not None else None,
    )


def elc_solve(
    inst: Instance,
    limits: Limits = Limits(),
    prune: bool = True,
    select: str = "scan",
) -> SolveOutcome:
    """Exact solver seeded by every feasible coloring of one greedy clique."""
    return _drive(inst, limits, double_clique=False, prune=prune, select=select)


def dcc_solve(
    inst: Instance,
    limits: Limits = Limits(),
    prune: bool = True,
    select: str = "scan",
) -> SolveOutcome:
    """elc_solve variant seeded by two disjoint cliques; the lower bound is
    the exact optimum of the induced two-clique subgraph."""
    return _drive(inst, limits, double_clique=True, prune=prune, select=select)


def _drive(
    inst: Instance, limits: Limits, double_clique: bool, prune: bool, select: str
) -> SolveOutcome:
    if inst.n == 0:
        return SolveOutcome(status=OPTIMAL, coloring=Coloring(assignment={}))
    deadline = (
        time.monotonic() + limits.wall_clock_seconds
        if limits.wall_clock_seconds is not None
        else float("inf")
    )
    pp = pack(inst)
    cap = limits.iteration_cap or 0
    total_nodes = 0

    k1 = find_clique(inst.graph)
    if double_clique:
        rest = sorted(set(range(inst.n)) - set(k1))
        k2: tuple[int, ...] = ()
        if rest:
            sub_g, keep = inst.graph.subgraph(rest)
            k2 = tuple(sorted(keep[v] for v in find_clique(sub_g)))
        seeds = tuple(sorted(set(k1) | set(k2)))
        lb, lb_nodes, lb_state = _exact_subgraph_lb(
            inst, seeds, max(len(k1), len(k2)), deadline
        )
        total_nodes += lb_nodes
        if lb_state == "timeout":
            return SolveOutcome(status=TIMEOUT, nodes=total_nodes)
        if lb_state == "infeasible":
            return SolveOutcome(status=INFEASIBLE, nodes=total_nodes)
    else:
        seeds = k1
        lb = len(k1)

    ub = pp.p + 1
    best_assign: list[int] | None = None
    best_count = -1
    any_capped = False
    any_restart = False
    truncated = False
    timed_out = False
    certified = False

    stream = iter(enumerate_feasible_colorings(inst, seeds))
    started = 0
    while True:
        if limits.restarts is not None and started >= limits.restarts:
            truncated = next(stream, _SENTINEL) is not _SENTINEL
            break
        init = next(stream, _SENTINEL)
        if init is _SENTINEL:
            break
        any_restart = True
        started += 1
        if time.monotonic() > deadline:
            timed_out = True
            break
        if prune and len(set(init.values())) >= ub:
            continue
        status, nodes, bc, ba = _run_packed(
            pp, init, ub, lb, cap, deadline, prune, select
        )
        total_nodes += int(nodes)
        if bc >= 0 and (best_count < 0 or bc < best_count):
            best_count = bc
            best_assign = ba
            if prune:
                ub = bc
        if status == engine.CERTIFIED:
            certified = True
            break
        if status == engine.TIMED_OUT:
            timed_out = True
            break
        if status == engine.CAPPED:
            any_capped = True
        if prune and best_count >= 0 and best_count <= lb:
            certified = True
            break

    best = _to_coloring(pp, best_assign) if best_assign is not None else None
    if certified:
        return SolveOutcome(status=OPTIMAL, coloring=best, nodes=total_nodes)
    if timed_out:
        return SolveOutcome(status=TIMEOUT, coloring=best, nodes=total_nodes)
    if not any_restart and not truncated:
        # the clique itself admits no feasible coloring
        return SolveOutcome(status=INFEASIBLE, nodes=total_nodes)
    if best is not None:
        if any_capped or truncated:
            return SolveOutcome(status=FEASIBLE, coloring=best, nodes=total_nodes)
        return SolveOutcome(status=OPTIMAL, coloring=best, nodes=total_nodes)
    if any_capped or truncated:
        return SolveOutcome(status=NOSOLUTION, nodes=total_nodes)
    return SolveOutcome(status=INFEASIBLE, nodes=total_nodes)


def _exact_subgraph_lb(
    inst: Instance, seeds: tuple[int, ...], clique_lb: int, deadline: float
) -> tuple[int, int, str]:
    """Exact minimum distinct colors over the subgraph induced by seeds.
    Returns (bound, nodes, state) with state ok | infeasible | timeout."""
    sub_g, keep = inst.graph.subgraph(list(seeds))
    sub_inst = Instance(
        graph=sub_g, lists=tuple(inst.lists[orig] for orig in keep)
    )
    spp = pack(sub_inst)
    status, nodes, best_count, _ = engine.run_restart(
        spp, [], [], spp.p + 1, clique_lb, 0, deadline, True, "scan"
    )
    if status == engine.TIMED_OUT:
        return 0, int(nodes), "timeout"
    if best_count < 0:
        return 0, int(nodes), "infeasible"
    return best_count, int(nodes), "ok"
