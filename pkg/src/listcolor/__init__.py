"""List coloring solvers and a benchmark harness.

Given a graph and a per-vertex list of permissible colors, find a proper
coloring using as few distinct colors as possible. Solvers: a randomized
greedy (kgl_solve), a deterministic independent-set heuristic (lc_solve),
exact branch and bound with one or two clique seedings (elc_solve,
dcc_solve), and a brute-force oracle for small instances.
"""

from .bb import (
    Limits,
    active_kernel,
    bb_search,
    dcc_solve,
    elc_solve,
    find_clique,
)
from .errors import ConfigError, DimacsWarning, GraphInputError, ParseError
from .graph import Graph, build_graph, parse_dimacs, render_dimacs
from .greedy_list import KglRunStats, kgl_multi, kgl_solve
from .instance import (
    Coloring,
    GenConfig,
    Instance,
    ValidationReport,
    gen_instance,
    gen_lists,
    gen_random_graph,
    instance_from_lists,
    palette_size,
    parse_instance,
    serialize_instance,
    validate_coloring,
)
from .mis_heuristic import lc_solve
from .oracle import OracleResult, brute_force_opt
from .outcome import (
    FEASIBLE,
    HEURFAIL,
    INFEASIBLE,
    NOSOLUTION,
    OPTIMAL,
    STATUSES,
    TIMEOUT,
    SolveOutcome,
)
from .seeding import mix_seed

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "Coloring",
    "DimacsWarning",
    "FEASIBLE",
    "GenConfig",
    "Graph",
    "GraphInputError",
    "HEURFAIL",
    "INFEASIBLE",
    "Instance",
    "KglRunStats",
    "Limits",
    "NOSOLUTION",
    "OPTIMAL",
    "OracleResult",
    "ParseError",
    "STATUSES",
    "SolveOutcome",
    "TIMEOUT",
    "ValidationReport",
    "active_kernel",
    "bb_search",
    "brute_force_opt",
    "build_graph",
    "dcc_solve",
    "elc_solve",
    "find_clique",
    "gen_instance",
    "gen_lists",
    "gen_random_graph",
    "instance_from_lists",
    "kgl_multi",
    "kgl_solve",
    "lc_solve",
    "mix_seed",
    "palette_size",
    "parse_dimacs",
    "parse_instance",
    "render_dimacs",
    "serialize_instance",
    "validate_coloring",
    "__version__",
]
