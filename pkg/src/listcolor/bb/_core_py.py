"""Pure-Python search kernel.

Reference implementation of one branch-and-bound restart; the compiled
kernel mirrors it operation for operation and is validated against it.
Supports two interchangeable vertex-selection structures: a linear scan
and a lazy max-heap (identical selections, cross-checked in tests).
"""

from __future__ import annotations

from heapq import heappop, heappush
from time import monotonic
from typing import Sequence

from .problem import PackedProblem

COMPLETED = 0
CAPPED = 1
TIMED_OUT = 2
CERTIFIED = 3


def run_restart(
    pp: PackedProblem,
    init_vs: Sequence[int],
    init_cs: Sequence[int],
    ub: int,
    lb: int,
    cap: int,
    deadline: float,
    prune: bool = True,
    select: str = "scan",
) -> tuple[int, int, int, list[int] | None]:
    """One depth-first restart from a pre-placed partial coloring.

    init_vs/init_cs give vertices and palette-index colors placed before the
    search (not counted as iterations). ub/lb bound distinct colors; cap is
    the iteration budget (0 = unlimited); deadline is an absolute
    time.monotonic() value (inf = none). An iteration is one permissible
    non-conflicting vertex-color assignment attempt, counted before the
    bound test. prune=False disables both the bound test and the
    certified-at-lb early exit (full exhaustion, for cross-checks).

    Returns (status, iterations, best distinct count or -1, best assignment
    as a palette-index list or None).
    """
    if select not in ("scan", "heap"):
        raise ValueError(f"unknown select variant: {select!r}")
    use_heap = select == "heap"
    n, p = pp.n, pp.p
    adj, masks, sizes = pp.adj, pp.masks, pp.sizes

    assign = [-1] * n
    ncc = [[0] * p for _ in range(n)]
    blocked = [0] * n
    unc_deg = [len(adj[v]) for v in range(n)]
    color_use = [0] * p
    distinct = 0
    n_colored = 0
    nodes = 0
    best_count = -1
    best_assign: list[int] | None = None
    heap: list[tuple[int, int, int]] = []

    def push(v: int) -> None:
        heappush(heap, (-(p - sizes[v] + blocked[v]), -unc_deg[v], v))

    def do_assign(v: int, c: int) -> None:
        nonlocal distinct, n_colored
        assign[v] = c
        n_colored += 1
        color_use[c] += 1
        if color_use[c] == 1:
            distinct += 1
        for u in adj[v]:
            unc_deg[u] -= 1
            row = ncc[u]
            row[c] += 1
            if row[c] == 1 and masks[u][c]:
                blocked[u] += 1
            if use_heap and assign[u] < 0:
                push(u)

    def do_unassign(v: int, c: int) -> None:
        nonlocal distinct, n_colored
        for u in adj[v]:
            row = ncc[u]
            row[c] -= 1
            if row[c] == 0 and masks[u][c]:
                blocked[u] -= 1
            unc_deg[u] += 1
            if use_heap and assign[u] < 0:
                push(u)
        color_use[c] -= 1
        if color_use[c] == 0:
            distinct -= 1
        assign[v] = -1
        n_colored -= 1
        if use_heap:
            push(v)

    def select_scan() -> int:
        best_v = -1
        bd = bu = -1
        for v in range(n):
            if assign[v] >= 0:
                continue
            d = p - sizes[v] + blocked[v]
            if d < bd:
                continue
            u_ = unc_deg[v]
            if d > bd or u_ > bu:
                bd, bu, best_v = d, u_, v
        return best_v

    def select_heap() -> int:
        # Peek, never pop, the returned entry: the vertex may be abandoned
        # without an assignment (all colors pruned), and its entry must
        # survive for later selections. Assignment makes it stale anyway.
        while True:
            while heap:
                nd, nu, v = heap[0]
                if (
                    assign[v] >= 0
                    or -nd != p - sizes[v] + blocked[v]
                    or -nu != unc_deg[v]
                ):
                    heappop(heap)
                    continue
                return v
            for v in range(n):
                if assign[v] < 0:
                    push(v)

    pick = select_heap if use_heap else select_scan

    for v, c in zip(init_vs, init_cs):
        if assign[v] >= 0 or not masks[v][c] or ncc[v][c] != 0:
            raise ValueError(f"invalid initial placement ({v}, {c})")
        do_assign(v, c)
        if prune and distinct >= ub:
            return COMPLETED, 0, -1, None
    if use_heap:
        heap.clear()
        for v in range(n):
            if assign[v] < 0:
                push(v)

    if n_colored == n:
        best_count = distinct
        best_assign = assign.copy()
        if prune and distinct <= lb:
            return CERTIFIED, 0, best_count, best_assign
        return COMPLETED, 0, best_count, best_assign

    fv = [0] * (n + 1)
    fc = [0] * (n + 1)
    fa = [0] * (n + 1)
    depth = 0
    fv[0] = pick()
    fc[0] = -1
    fa[0] = 0

    while depth >= 0:
        v = fv[depth]
        cc = fc[depth] + 1
        if fa[depth]:
            do_unassign(v, fc[depth])
            fa[depth] = 0
        row_mask = masks[v]
        row_ncc = ncc[v]
        descended = False
        while cc < p:
            if row_mask[cc] and row_ncc[cc] == 0:
                if cap > 0 and nodes >= cap:
                    return CAPPED, nodes, best_count, best_assign
                nodes += 1
                if (nodes & 255) == 0 and monotonic() > deadline:
                    return TIMED_OUT, nodes, best_count, best_assign
                nd = distinct + (0 if color_use[cc] else 1)
                if prune and nd >= ub:
                    cc += 1
                    continue
                do_assign(v, cc)
                if n_colored == n:
                    if best_count < 0 or distinct < best_count:
                        best_count = distinct
                        best_assign = assign.copy()
                        ub = distinct
                        if prune and distinct <= lb:
                            return CERTIFIED, nodes, best_count, best_assign
                    do_unassign(v, cc)
                    cc += 1
                    continue
                fc[depth] = cc
                fa[depth] = 1
                depth += 1
                fv[depth] = pick()
                fc[depth] = -1
                fa[depth] = 0
                descended = True
                break
            cc += 1
        if not descended:
            depth -= 1

    return COMPLETED, nodes, best_count, best_assign
