"""Solver outcome record shared by all solvers."""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Coloring

# Status vocabulary (also the CSV vocabulary):
#   optimal    proven minimum-distinct-color solution
#   feasible   solution found, optimality not proven
#   timeout    wall clock expired (best-so-far attached when one exists)
#   nosolution search ended without a solution but without proof none exists
#   infeasible proven that no solution exists
#   heurfail   heuristic gave up (no proof of anything)
OPTIMAL = "optimal"
FEASIBLE = "feasible"
TIMEOUT = "timeout"
NOSOLUTION = "nosolution"
INFEASIBLE = "infeasible"
HEURFAIL = "heurfail"

STATUSES = (OPTIMAL, FEASIBLE, TIMEOUT, NOSOLUTION, INFEASIBLE, HEURFAIL)


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    coloring: Coloring | None = None
    nodes: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def colors(self) -> int | None:
        """Distinct colors used by the attached coloring, if any."""
        return self.coloring.distinct_count if self.coloring is not None else None

    @property
    def proven_optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def has_coloring(self) -> bool:
        return self.coloring is not None

    def key(self) -> tuple:
        """Deterministic comparison key for repeat-run identity checks."""
        assignment = (
            tuple(sorted(self.coloring.assignment.items()))
            if self.coloring is not None
            else None
        )
        return (self.status, assignment, self.nodes)
