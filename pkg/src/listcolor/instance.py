"""Instances: a graph plus per-vertex color availability lists.

Colors are 1-based positive ints. The palette of an instance is the union of
all lists, recomputed on demand so it can never go stale.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ConfigError, ParseError
from .graph import Graph, build_graph
from .seeding import mix_seed

# Guard against binary-float noise in decimal range factors (0.3 * 50 etc.):
# values within 1e-9 of an integer floor to that integer.
_FLOOR_EPS = 1e-9


def palette_size(c: float, n: int) -> int:
    """Number of colors in the generator's range [1, floor(c*n)]."""
    return math.floor(c * n + _FLOOR_EPS)


@dataclass(frozen=True)
class Instance:
    """Immutable list-coloring instance."""

    graph: Graph
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.lists) != self.graph.n:
            raise ConfigError(
                f"{len(self.lists)} lists for {self.graph.n} vertices"
            )
        for v, lv in enumerate(self.lists):
            for color in lv:
                if color < 1:
                    raise ConfigError(f"vertex {v} has non-positive color {color}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def palette(self) -> frozenset[int]:
        """Union of all availability lists (recomputed, never cached)."""
        return frozenset().union(*self.lists) if self.lists else frozenset()


@dataclass(frozen=True)
class Coloring:
    """A (possibly partial) vertex -> color assignment."""

    assignment: dict[int, int]

    @property
    def distinct_count(self) -> int:
        return len(set(self.assignment.values()))

    def color_of(self, v: int) -> int | None:
        return self.assignment.get(v)


@dataclass(frozen=True)
class GenConfig:
    """Random-instance parameters: size, edge density, color-range factor,
    list length, seed."""

    n: int
    d: float
    c: float
    k: int
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if not (0.0 <= self.d <= 1.0):
            raise ConfigError(f"density must be in [0, 1], got {self.d}")
        r = palette_size(self.c, self.n)
        if r < 1:
            raise ConfigError(f"color range [1, {r}] is empty (c={self.c}, n={self.n})")
        if self.k < 1 or self.k > r:
            raise ConfigError(
                f"list length {self.k} must be in [1, {r}] for c={self.c}, n={self.n}"
            )


def gen_random_graph(n: int, d: float, seed: int) -> Graph:
    """G(n, p) with p = d: each of the n(n-1)/2 pairs becomes an edge
    independently with probability d. Deterministic for a fixed seed
    (pairs visited in ascending (u, v) order, one uniform draw each)."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < d
    ]
    return build_graph(n, edges)


def gen_lists(
    graph: Graph, c: float, k: int, seed: int
) -> tuple[frozenset[int], ...]:
    """Per vertex, k distinct colors sampled uniformly without replacement
    from [1, floor(c*n)]. Deterministic for a fixed seed (vertices in id
    order, one sample call each)."""
    r = palette_size(c, graph.n)
    if k > r:
        raise ConfigError(f"list length {k} exceeds color range [1, {r}]")
    rng = random.Random(seed)
    colors = range(1, r + 1)
    return tuple(frozenset(rng.sample(colors, k)) for _ in range(graph.n))


def gen_instance(cfg: GenConfig) -> Instance:
    """Instance from one config. The graph seed depends only on cfg.seed, so
    configs differing in (c, k) alone share the graph; the list seed mixes
    in (c, k) to decorrelate the different list assignments."""
    g = gen_random_graph(cfg.n, cfg.d, mix_seed(cfg.seed, "graph"))
    lists = gen_lists(g, cfg.c, cfg.k, mix_seed(cfg.seed, "lists", cfg.c, cfg.k))
    return Instance(graph=g, lists=lists)


# --- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # "off-list" | "conflict" | "uncolored" | "unknown-vertex"
    where: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(v.detail for v in self.violations)


def validate_coloring(
    inst: Instance, coloring: Coloring, require_total: bool = True
) -> ValidationReport:
    """Report every violation: off-list colors, monochromatic edges, and
    (when totality is demanded) uncolored vertices. Violations are data,
    not exceptions."""
    out: list[Violation] = []
    assignment = coloring.assignment
    for v, color in sorted(assignment.items()):
        if not (0 <= v < inst.n):
            out.append(
                Violation("unknown-vertex", (v,), f"vertex {v} not in graph")
            )
            continue
        if color not in inst.lists[v]:
            out.append(
                Violation(
                    "off-list", (v,), f"vertex {v} colored {color} not in its list"
                )
            )
    for u, v in inst.graph.edges():
        cu, cv = assignment.get(u), assignment.get(v)
        if cu is not None and cu == cv:
            out.append(
                Violation("conflict", (u, v), f"edge ({u}, {v}) both colored {cu}")
            )
    if require_total:
        for v in range(inst.n):
            if v not in assignment:
                out.append(Violation("uncolored", (v,), f"vertex {v} uncolored"))
    return ValidationReport(tuple(out))


# --- instance text format ---------------------------------------------------
#
# One instance per file:
#   l <n> <k_max>
#   v <id> <c1> <c2> ...      (1-based vertex ids and colors; one per vertex)
#   e <u> <v>                 (optional inline graph, 1-based, after the lists)
#
# A file without `e` lines is a list file to be paired with a separate
# DIMACS graph.


def serialize_instance(inst: Instance, include_edges: bool = True) -> str:
    """Render instance text; lossless against parse_instance."""
    k_max = max((len(lv) for lv in inst.lists), default=0)
    lines = [f"l {inst.n} {k_max}"]
    for v, lv in enumerate(inst.lists):
        colors = " ".join(str(c) for c in sorted(lv))
        lines.append(f"v {v + 1} {colors}".rstrip())
    if include_edges:
        lines.extend(f"e {u + 1} {v + 1}" for u, v in inst.graph.edges())
    return "\n".join(lines) + "\n"


def parse_list_file(
    text: str,
) -> tuple[int, tuple[frozenset[int], ...], list[tuple[int, int]] | None]:
    """Parse instance text into (n, lists, edges); edges is None when the
    file carries no inline `e` lines. Vertices without a `v` line get an
    empty list (parsed instances may be infeasible that way)."""
    n: int | None = None
    lists: list[frozenset[int] | None] = []
    edges: list[tuple[int, int]] | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "l":
            if n is not None:
                raise ParseError("duplicate header line", line_no)
            if len(tokens) != 3:
                raise ParseError(f"malformed header {line!r}", line_no)
            try:
                n = int(tokens[1])
                int(tokens[2])  # k_max: informational
            except ValueError:
                raise ParseError(f"malformed header {line!r}", line_no) from None
            if n < 0:
                raise ParseError("negative vertex count", line_no)
            lists = [None] * n
        elif kind == "v":
            if n is None:
                raise ParseError("list line before header", line_no)
            if edges is not None:
                raise ParseError("list line after edge block", line_no)
            try:
                vid = int(tokens[1])
                colors = [int(t) for t in tokens[2:]]
            except ValueError:
                raise ParseError(f"malformed list line {line!r}", line_no) from None
            if not (1 <= vid <= n):
                raise ParseError(f"vertex {vid} outside [1, {n}]", line_no)
            if lists[vid - 1] is not None:
                raise ParseError(f"duplicate list for vertex {vid}", line_no)
            if any(c < 1 for c in colors):
                raise ParseError("non-positive color", line_no)
            lists[vid - 1] = frozenset(colors)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before header", line_no)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", line_no)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line_no) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(f"endpoint outside [1, {n}]", line_no)
            if edges is None:
                edges = []
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise ParseError("missing header line")
    filled = tuple(lv if lv is not None else frozenset() for lv in lists)
    return n, filled, edges


def parse_instance(text: str, graph: Graph | None = None) -> Instance:
    """Parse instance text; `graph` supplies the edges when the file has no
    inline `e` block (and must agree on n when it does not)."""
    n, lists, edges = parse_list_file(text)
    if edges is not None:
        if graph is not None:
            raise ConfigError("graph given twice: inline edges and a graph file")
        graph = build_graph(n, edges)
    if graph is None:
        graph = build_graph(n, [])
    if graph.n != n:
        raise ConfigError(f"list file has n={n} but graph has n={graph.n}")
    return Instance(graph=graph, lists=lists)


def instance_from_lists(
    graph: Graph, lists: Iterable[Iterable[int]]
) -> Instance:
    """Convenience constructor from any iterable-of-iterables."""
    return Instance(graph=graph, lists=tuple(frozenset(lv) for lv in lists))


def coloring_from(mapping: Mapping[int, int]) -> Coloring:
    return Coloring(assignment=dict(mapping))
