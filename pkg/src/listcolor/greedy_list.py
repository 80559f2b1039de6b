"""Randomized greedy list coloring (the "kgl" solver).

Repeatedly colors the uncolored vertex with the fewest remaining permissible
colors. Ties are broken uniformly at random, the color is drawn uniformly
from the vertex's remaining list, and the chosen color is deleted from every
uncolored neighbor's remaining list. Selecting a vertex whose remaining list
is empty is the failure condition.

Randomness protocol (fixed for reproducibility): a single run-scoped
random.Random stream; per step, one uniform draw picks the vertex among the
tied minimizers (drawn even when the tie set is a singleton), then one
uniform draw picks the color from the sorted remaining list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .instance import Coloring, Instance
from .outcome import FEASIBLE, HEURFAIL, SolveOutcome
from .seeding import mix_seed

StepHook = Callable[[int, int, dict[int, set[int]]], None]


def kgl_solve(
    inst: Instance, seed: int, on_step: StepHook | None = None
) -> SolveOutcome:
    """One randomized greedy run. `on_step(vertex, color, remaining)` fires
    after each assignment (test instrumentation)."""
    rng = random.Random(seed)
    remaining: dict[int, set[int]] = {
        v: set(inst.lists[v]) for v in range(inst.n)
    }
    assignment: dict[int, int] = {}
    uncolored = set(range(inst.n))
    while uncolored:
        fewest = min(len(remaining[v]) for v in uncolored)
        ties = sorted(v for v in uncolored if len(remaining[v]) == fewest)
        v = ties[rng.randrange(len(ties))]
        if not remaining[v]:
            return SolveOutcome(status=HEURFAIL)
        choices = sorted(remaining[v])
        color = choices[rng.randrange(len(choices))]
        assignment[v] = color
        uncolored.discard(v)
        for u in inst.graph.adj[v]:
            if u in uncolored:
                remaining[u].discard(color)
        if on_step is not None:
            on_step(v, color, remaining)
    return SolveOutcome(status=FEASIBLE, coloring=Coloring(assignment=assignment))


@dataclass(frozen=True)
class KglRunStats:
    """Aggregate over repeated runs; mean/std (population formula) cover the
    successful runs only, and are None when every run failed."""

    runs: int
    successes: int
    mean_colors: float | None
    std_colors: float | None
    per_run: tuple[SolveOutcome, ...]

    @property
    def best_colors(self) -> int | None:
        counts = [o.colors for o in self.per_run if o.colors is not None]
        return min(counts) if counts else None

    def render(self) -> str:
        """Table cell text: 'mean(std)' to one decimal, blank when no run
        succeeded."""
        if self.mean_colors is None:
            return ""
        return f"{self.mean_colors:.1f}({self.std_colors:.1f})"


def kgl_multi(inst: Instance, runs: int, seed: int) -> KglRunStats:
    """Run kgl_solve `runs` times with per-run seeds mixed from (seed, index)."""
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    outcomes = tuple(
        kgl_solve(inst, mix_seed(seed, "run", i)) for i in range(runs)
    )
    counts = [o.colors for o in outcomes if o.colors is not None]
    if counts:
        mean = sum(counts) / len(counts)
        std = (sum((x - mean) ** 2 for x in counts) / len(counts)) ** 0.5
    else:
        mean = std = None
    return KglRunStats(
        runs=runs,
        successes=len(counts),
        mean_colors=mean,
        std_colors=std,
        per_run=outcomes,
    )
