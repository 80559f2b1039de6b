"""Branch-and-bound list coloring solvers and their search kernels."""

from .engine import active_kernel
from .problem import PackedProblem, pack
from .solve import (
    Limits,
    RestartReport,
    bb_search,
    dcc_solve,
    elc_solve,
    enumerate_clique_colorings,
    enumerate_feasible_colorings,
    find_clique,
    select_next_vertex,
    unavailable_degree,
)

__all__ = [
    "Limits",
    "PackedProblem",
    "RestartReport",
    "active_kernel",
    "bb_search",
    "dcc_solve",
    "elc_solve",
    "enumerate_clique_colorings",
    "enumerate_feasible_colorings",
    "find_clique",
    "pack",
    "select_next_vertex",
    "unavailable_degree",
]
