"""Graph construction, queries, and DIMACS round-trips."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from listcolor.errors import DimacsWarning, GraphInputError, ParseError
from listcolor.graph import build_graph, parse_dimacs, render_dimacs


class TestBuildGraph:
    def test_path_graph(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert g.m == 2
        assert [g.degree(v) for v in range(3)] == [1, 2, 1]

    def test_duplicate_edges_collapse(self):
        g = build_graph(2, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(GraphInputError):
            build_graph(2, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphInputError):
            build_graph(2, [(0, 2)])
        with pytest.raises(GraphInputError):
            build_graph(2, [(-1, 0)])

    def test_empty_graph(self):
        g = build_graph(0, [])
        assert g.n == 0 and g.m == 0


class TestQueries:
    def test_degree_middle_of_path(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert g.degree(1) == 2

    def test_degree_isolated(self):
        g = build_graph(3, [(0, 1)])
        assert g.degree(2) == 0

    def test_degree_complete_k5(self):
        g = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        assert all(g.degree(v) == 4 for v in range(5))

    def test_edges_sorted_unique(self):
        g = build_graph(4, [(2, 1), (0, 3), (1, 2)])
        assert list(g.edges()) == [(0, 3), (1, 2)]

    def test_density_and_mean_degree(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.density() == pytest.approx(6 / 12)
        assert g.mean_degree() == pytest.approx(1.5)

    def test_density_degenerate(self):
        assert build_graph(1, []).density() == 0.0
        assert build_graph(0, []).mean_degree() == 0.0

    def test_subgraph_induces_edges(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        sub, keep = g.subgraph([4, 0, 1])
        assert keep == [0, 1, 4]
        assert sorted(sub.edges()) == [(0, 1), (0, 2)]


class TestParseDimacs:
    def test_minimal_file(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3 and g.m == 2
        assert g.is_edge(0, 1) and g.is_edge(1, 2) and not g.is_edge(0, 2)

    def test_edge_before_problem_line(self):
        with pytest.raises(ParseError) as exc:
            parse_dimacs("e 1 2\np edge 2 1")
        assert "line 1" in str(exc.value)

    def test_missing_problem_line(self):
        with pytest.raises(ParseError):
            parse_dimacs("c only a comment\n")

    def test_malformed_tokens(self):
        with pytest.raises(ParseError):
            parse_dimacs("p edge x 2\n")
        with pytest.raises(ParseError):
            parse_dimacs("p edge 3 1\ne 1\n")
        with pytest.raises(ParseError):
            parse_dimacs("p edge 3 1\nq 1 2\n")

    def test_endpoint_beyond_n(self):
        with pytest.raises(ParseError) as exc:
            parse_dimacs("p edge 2 1\ne 1 3\n")
        assert "line 2" in str(exc.value)

    def test_duplicate_edges_warn_on_declared_mismatch(self):
        text = "p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n"
        with pytest.warns(DimacsWarning):
            g = parse_dimacs(text)
        assert g.m == 2

    def test_comments_crlf_and_trailing_blanks(self):
        text = "c hi\r\np edge 2 1\r\ne 1 2\r\n\r\n\r\n"
        g = parse_dimacs(text)
        assert g.n == 2 and g.m == 1


def _random_graph_strategy():
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=12))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), max_size=30)) if pairs else []
        return build_graph(n, edges)

    return st.composite(build)()


@given(_random_graph_strategy())
@settings(max_examples=60, deadline=None)
def test_handshake_and_symmetry(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert g.is_edge(u, v) == g.is_edge(v, u)


@given(_random_graph_strategy())
@settings(max_examples=60, deadline=None)
def test_dimacs_round_trip(g):
    back = parse_dimacs(render_dimacs(g, comment="round trip"))
    assert back.n == g.n and back.m == g.m
    assert back.adj == g.adj
