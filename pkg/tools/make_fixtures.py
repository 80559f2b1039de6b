"""Regenerate the bundled DIMACS .col graphs.

queen<R>_<C>: one vertex per board square (row-major, 1-based ids), edges
between squares sharing a row, column, or diagonal.

jean: Les Miserables character-coappearance graph. Edges come from the
coappearance data bundled with networkx (77 named characters, 254 edges);
ids follow sorted character names. Three isolated vertices pad the count to
the published 80 (the original includes characters with no coappearances).

Usage: python tools/make_fixtures.py [outdir]
"""

from __future__ import annotations

import sys
from pathlib import Path

import networkx as nx


def queen_edges(rows: int, cols: int) -> list[tuple[int, int]]:
    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    squares = [(r, c) for r in range(rows) for c in range(cols)]
    for i, (r1, c1) in enumerate(squares):
        for r2, c2 in squares[i + 1 :]:
            if r1 == r2 or c1 == c2 or r1 - c1 == r2 - c2 or r1 + c1 == r2 + c2:
                edges.append((vid(r1, c1), vid(r2, c2)))
    return edges


def jean_graph() -> tuple[int, list[tuple[int, int]]]:
    g = nx.les_miserables_graph()
    names = sorted(g.nodes())
    index = {name: i for i, name in enumerate(names)}
    edges = sorted(
        (min(index[a], index[b]), max(index[a], index[b])) for a, b in g.edges()
    )
    return len(names) + 3, edges


def render(name: str, n: int, edges: list[tuple[int, int]]) -> str:
    lines = [f"c {name}", f"p edge {n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(edges))
    return "\n".join(lines) + "\n"


def main() -> int:
    outdir = Path(
        sys.argv[1]
        if len(sys.argv) > 1
        else Path(__file__).resolve().parent.parent
        / "src"
        / "listcolor"
        / "data"
        / "dimacs"
    )
    outdir.mkdir(parents=True, exist_ok=True)
    boards = {"queen8_8": (8, 8), "queen8_12": (8, 12), "queen9_9": (9, 9)}
    for name, (rows, cols) in boards.items():
        edges = queen_edges(rows, cols)
        path = outdir / f"{name}.col"
        path.write_text(render(name, rows * cols, edges))
        print(f"{path}: n={rows * cols} m={len(edges)}")
    n, edges = jean_graph()
    path = outdir / "jean.col"
    path.write_text(render("jean", n, edges))
    print(f"{path}: n={n} m={len(edges)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
