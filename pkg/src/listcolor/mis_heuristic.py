"""Deterministic list coloring via repeated maximal independent sets
(the "lc" solver).

Each round considers every color still in the live palette (the union of
all lists minus colors already used). For color i the candidates are the
uncolored vertices whose list contains i, ordered by ascending static degree
with vertex id as tie-break. A cheap maximal independent set is grown over
each candidate order; the round colors the largest one (smallest color on
ties) and retires that color. Fails when uncolored vertices remain but no
color has any candidate left.
"""

from __future__ import annotations

from .graph import Graph
from .instance import Coloring, Instance
from .outcome import FEASIBLE, HEURFAIL, SolveOutcome


def greedy_mis(order: list[int], graph: Graph) -> list[int]:
    """Maximal independent set by single linear scan: seed with the first
    vertex, then add each later vertex not adjacent to the set so far."""
    chosen: list[int] = []
    taken: set[int] = set()
    for v in order:
        if any(u in taken for u in graph.adj[v]):
            continue
        chosen.append(v)
        taken.add(v)
    return chosen


def candidate_order(inst: Instance, color: int, uncolored: set[int]) -> list[int]:
    """Uncolored vertices permitting `color`, ascending static degree, then id."""
    cands = [v for v in uncolored if color in inst.lists[v]]
    cands.sort(key=lambda v: (inst.graph.degree(v), v))
    return cands


def lc_solve(inst: Instance) -> SolveOutcome:
    live = set(inst.palette)
    uncolored = set(range(inst.n))
    assignment: dict[int, int] = {}
    while uncolored:
        best_set: list[int] | None = None
        best_color = -1
        for color in sorted(live):
            order = candidate_order(inst, color, uncolored)
            if not order:
                continue
            mis = greedy_mis(order, inst.graph)
            if best_set is None or len(mis) > len(best_set):
                best_set = mis
                best_color = color
        if best_set is None:
            return SolveOutcome(status=HEURFAIL)
        for v in best_set:
            assignment[v] = best_color
        uncolored.difference_update(best_set)
        live.discard(best_color)
    return SolveOutcome(status=FEASIBLE, coloring=Coloring(assignment=assignment))
