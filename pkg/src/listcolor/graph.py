"""Undirected simple graphs with set-based adjacency, plus DIMACS .col I/O.

Vertices are 0-based ints internally; the DIMACS text format is 1-based and
is converted at the parse/render boundary only.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DimacsWarning, GraphInputError, ParseError


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    `adj[v]` is the neighbor set of `v` (O(1) membership tests; the solvers
    probe adjacency in inner loops). Safe to share across workers.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    m: int = field(default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def is_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def density(self) -> float:
        """Edge density 2m / (n(n-1)); 0.0 for graphs with fewer than 2 vertices."""
        if self.n < 2:
            return 0.0
        return 2.0 * self.m / (self.n * (self.n - 1))

    def mean_degree(self) -> float:
        return 2.0 * self.m / self.n if self.n else 0.0

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on `vertices`.

        Returns the subgraph (vertices renumbered 0..len-1 in ascending order
        of original id) and the list mapping new id -> original id.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in index
        ]
        return build_graph(len(keep), edges), keep


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list.

    Duplicate edges (in either orientation) collapse silently; self-loops and
    out-of-range endpoints raise GraphInputError.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be >= 0, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in edge_list:
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        if v not in adj[u]:
            adj[u].add(v)
            adj[v].add(u)
            m += 1
    return Graph(n=n, adj=tuple(frozenset(s) for s in adj), m=m)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS .col text: `c` comments, one `p edge <n> <m>` line, then
    `e <u> <v>` lines with 1-based endpoints.

    Duplicate edge lines collapse; a declared edge count that differs from the
    distinct-edge count raises DimacsWarning (several published files are
    inconsistent), not an error. Tolerates \\r\\n endings and trailing blanks.
    """
    n: int | None = None
    declared_m: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", line_no)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"malformed problem line {line!r}", line_no)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed problem line {line!r}", line_no) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative count in problem line", line_no)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before problem line", line_no)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", line_no)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line_no) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(f"endpoint outside [1, {n}] in {line!r}", line_no)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line_no)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise ParseError("missing problem line")
    g = build_graph(n, edges)
    if declared_m is not None and g.m != declared_m:
        warnings.warn(
            f"problem line declares {declared_m} edges but file has {g.m} distinct",
            DimacsWarning,
            stacklevel=2,
        )
    return g


def render_dimacs(g: Graph, comment: str | None = None) -> str:
    """Render a graph as DIMACS .col text (inverse of parse_dimacs)."""
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
