"""Bundled benchmark graphs in DIMACS .col format.

Queen graphs are generated from the standard board construction (vertices
are squares, edges join squares a queen move apart). jean is the Les
Miserables character-coappearance graph. See tools/make_fixtures.py for
regeneration.
"""

from __future__ import annotations

from importlib import resources

from ..graph import Graph, parse_dimacs


def fixture_names() -> tuple[str, ...]:
    """Bundled .col file names, sorted."""
    root = resources.files(__package__) / "dimacs"
    return tuple(
        sorted(
            entry.name
            for entry in root.iterdir()
            if entry.name.endswith(".col")
        )
    )


def load_fixture_text(name: str) -> str:
    """Raw text of a bundled .col file."""
    return (resources.files(__package__) / "dimacs" / name).read_text()


def load_fixture(name: str) -> Graph:
    """Parse a bundled .col file into a Graph."""
    return parse_dimacs(load_fixture_text(name))
