"""Exhaustive list-coloring optimizer: slow, simple, trusted.

Ground truth for the test suite. Deliberately shares no bookkeeping with the
branch-and-bound solver: adjacency conflicts are re-checked by direct scans
and the distinct count is recomputed from a plain color stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Coloring, Instance
from .outcome import INFEASIBLE, OPTIMAL, SolveOutcome

OPTIMAL_STATUS = "optimal"
INFEASIBLE_STATUS = "infeasible"


@dataclass(frozen=True)
class OracleResult:
    status: str  # "optimal" | "infeasible"
    count: int | None
    witness: Coloring | None
    nodes: int

    def to_outcome(self) -> SolveOutcome:
        if self.status == OPTIMAL_STATUS:
            return SolveOutcome(status=OPTIMAL, coloring=self.witness, nodes=self.nodes)
        return SolveOutcome(status=INFEASIBLE, nodes=self.nodes)


def brute_force_opt(inst: Instance, bound_prune: bool = True) -> OracleResult:
    """Minimum distinct colors over all complete list colorings, by
    exhaustive backtracking over vertices in id order (colors ascending).

    With bound_prune, branches whose current distinct count already reaches
    the incumbent are cut; any completion would use at least that many
    distinct colors, so the optimum is unchanged (cross-checked against the
    fully exhaustive mode in the tests). Practical up to n around 14 with
    small lists. `nodes` counts color assignments tried.
    """
    n = inst.n
    graph = inst.graph
    lists = [sorted(lv) for lv in inst.lists]
    assigned: list[int | None] = [None] * n
    color_stack: list[int] = []
    best_count: int | None = None
    best: list[int] | None = None
    nodes = 0

    def distinct_now() -> int:
        return len(set(color_stack))

    def extend(v: int) -> None:
        nonlocal best_count, best, nodes
        if v == n:
            count = distinct_now()
            if best_count is None or count < best_count:
                best_count = count
                best = list(assigned)  # complete by construction
            return
        for color in lists[v]:
            if any(assigned[u] == color for u in graph.adj[v]):
                continue
            nodes += 1
            color_stack.append(color)
            assigned[v] = color
            if not (
                bound_prune
                and best_count is not None
                and distinct_now() >= best_count
            ):
                extend(v + 1)
            assigned[v] = None
            color_stack.pop()

    extend(0)
    if best is None:
        return OracleResult(INFEASIBLE_STATUS, None, None, nodes)
    witness = Coloring(assignment={v: c for v, c in enumerate(best)})
    return OracleResult(OPTIMAL_STATUS, best_count, witness, nodes)
