"""Branch-and-bound solvers: selection rule, cliques, restarts, outcomes."""

import itertools
import random

import pytest

from listcolor.bb import (
    Limits,
    bb_search,
    dcc_solve,
    elc_solve,
    enumerate_clique_colorings,
    enumerate_feasible_colorings,
    find_clique,
    select_next_vertex,
    unavailable_degree,
)
from listcolor.data import load_fixture
from listcolor.graph import build_graph
from listcolor.instance import validate_coloring
from listcolor.oracle import brute_force_opt

from conftest import gen_batch, make_instance, triangle


class TestUnavailableDegree:
    def test_off_list_plus_blocked(self):
        # palette {1..5}; colors 4 and 5 are off-list for vertex 0 and its
        # neighbor holds color 2
        inst = make_instance(2, [(0, 1)], [{1, 2, 3}, {1, 2, 4, 5}])
        assert unavailable_degree(inst, {1: 2}, 0) == 3

    def test_zero_when_list_is_palette_and_nothing_colored(self):
        inst = make_instance(3, [(0, 1)], [{1, 2}, {1, 2}, {1, 2}])
        assert unavailable_degree(inst, {}, 0) == 0

    def test_full_palette_blocked(self):
        inst = make_instance(
            4,
            [(0, 1), (0, 2), (0, 3)],
            [{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}],
        )
        assert unavailable_degree(inst, {1: 1, 2: 2, 3: 3}, 0) == 3

    def test_accepts_coloring_object(self):
        from listcolor.instance import Coloring

        inst = make_instance(2, [(0, 1)], [{1, 2}, {1, 2}])
        assert unavailable_degree(inst, Coloring({1: 1}), 0) == 1


class TestSelectNextVertex:
    def test_full_tie_chain_gives_smallest_id(self):
        inst = make_instance(3, [], [{1, 2}, {1, 2}, {1, 2}])
        assert select_next_vertex(inst, {}) == 0

    def test_uncolored_degree_breaks_tie(self):
        # star: center 0 with leaves 1..3, identical lists, nothing colored;
        # all unavailable degrees are 0 but the center sees 3 uncolored
        # neighbors
        inst = make_instance(4, [(0, 1), (0, 2), (0, 3)], [{1, 2}] * 4)
        assert select_next_vertex(inst, {}) == 0

    def test_matches_exhaustive_scan(self):
        rng = random.Random(17)
        for inst in gen_batch("select", (10, 14), (0.3, 0.6), (0.8,), (3,)):
            partial = {}
            for v in range(inst.n):
                if rng.random() < 0.4:
                    partial[v] = rng.choice(sorted(inst.lists[v]))
            if len(partial) == inst.n:
                del partial[0]
            best = max(
                (v for v in range(inst.n) if v not in partial),
                key=lambda v: (
                    unavailable_degree(inst, partial, v),
                    sum(1 for u in inst.graph.adj[v] if u not in partial),
                    -v,
                ),
            )
            assert select_next_vertex(inst, partial) == best

    def test_no_uncolored_vertex_raises(self):
        inst = make_instance(1, [], [{1}])
        with pytest.raises(ValueError):
            select_next_vertex(inst, {0: 1})


class TestFindClique:
    def test_triangle(self):
        assert find_clique(build_graph(3, [(0, 1), (1, 2), (0, 2)])) == (0, 1, 2)

    def test_edgeless(self):
        assert find_clique(build_graph(4, [])) == (0,)

    def test_empty_graph_raises(self):
        with pytest.raises(ValueError):
            find_clique(build_graph(0, []))

    def test_queen8_8_row_is_clique_and_greedy_output_is_clique(self):
        g = load_fixture("queen8_8.col")
        row = tuple(range(8))  # one board row: mutually attacking squares
        for i, u in enumerate(row):
            for v in row[i + 1 :]:
                assert g.is_edge(u, v)
        clique = find_clique(g)
        assert len(clique) >= 2
        for i, u in enumerate(clique):
            for v in clique[i + 1 :]:
                assert g.is_edge(u, v)

    def test_always_pairwise_adjacent(self):
        for inst in gen_batch("clique", (12, 20), (0.2, 0.5), (0.5,), (2,)):
            clique = find_clique(inst.graph)
            assert clique == tuple(sorted(clique))
            for i, u in enumerate(clique):
                for v in clique[i + 1 :]:
                    assert inst.graph.is_edge(u, v)


class TestEnumerateColorings:
    def test_two_clique_both_orders(self):
        inst = make_instance(2, [(0, 1)], [{1, 2}, {1, 2}])
        got = list(enumerate_clique_colorings(inst, (0, 1)))
        assert got == [{0: 1, 1: 2}, {0: 2, 1: 1}]

    def test_singleton(self):
        inst = make_instance(1, [], [{3}])
        assert list(enumerate_clique_colorings(inst, (0,))) == [{0: 3}]

    def test_empty_stream(self):
        inst = make_instance(2, [(0, 1)], [{1}, {1}])
        assert list(enumerate_clique_colorings(inst, (0, 1))) == []

    def test_non_adjacent_vertices_rejected(self):
        inst = make_instance(3, [(0, 1)], [{1}, {2}, {3}])
        with pytest.raises(ValueError):
            list(enumerate_clique_colorings(inst, (0, 2)))

    def test_lazy(self):
        # 8-clique with 8 colors has 8! > 40000 colorings; taking the first
        # two must not enumerate them all
        n = 8
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        inst = make_instance(n, edges, [set(range(1, n + 1))] * n)
        stream = enumerate_clique_colorings(inst, range(n))
        first_two = list(itertools.islice(stream, 2))
        assert len(first_two) == 2
        assert first_two[0] == {v: v + 1 for v in range(n)}

    def test_non_clique_sets_allow_color_reuse(self):
        inst = make_instance(2, [], [{1, 2}, {1, 2}])
        got = list(enumerate_feasible_colorings(inst, (0, 1)))
        assert {0: 1, 1: 1} in got and len(got) == 4

    def test_matches_brute_force_filter(self):
        for inst in gen_batch("enum", (6,), (0.5,), (1.0,), (3,), per_combo=3):
            clique = find_clique(inst.graph)
            got = list(enumerate_clique_colorings(inst, clique))
            expect = []
            for combo in itertools.product(
                *[sorted(inst.lists[v]) for v in clique]
            ):
                if len(set(combo)) == len(clique):
                    expect.append(dict(zip(clique, combo)))
            assert got == expect


class TestBbSearch:
    def test_triangle_certifies_at_lower_bound(self):
        report = bb_search(triangle(), lb=3)
        assert report.status == "certified"
        assert report.best_count == 3
        assert validate_coloring(triangle(), report.best).ok

    def test_forced_infeasible_edge(self):
        inst = make_instance(2, [(0, 1)], [{1}, {1}])
        report = bb_search(inst)
        assert report.status == "completed"
        assert report.best_count is None and report.best is None

    def test_matches_oracle_when_completed(self):
        lim = Limits(iteration_cap=None, wall_clock_seconds=None)
        for inst in gen_batch("bb-oracle", (6, 8, 10), (0.3, 0.6), (0.6, 1.0), (2, 3)):
            report = bb_search(inst, limits=lim)
            truth = brute_force_opt(inst)
            assert report.status in ("completed", "certified")
            if truth.status == "optimal":
                assert report.best_count == truth.count
            else:
                assert report.best_count is None

    def test_seeded_search_respects_initial(self):
        inst = triangle()
        report = bb_search(inst, initial={0: 2}, limits=Limits())
        assert report.best.assignment[0] == 2

    def test_invalid_initial_rejected(self):
        inst = triangle()
        with pytest.raises(ValueError):
            bb_search(inst, initial={0: 9})  # off-list
        with pytest.raises(ValueError):
            bb_search(inst, initial={0: 1, 1: 1})  # conflict on an edge
        with pytest.raises(ValueError):
            bb_search(inst, initial={7: 1})  # unknown vertex

    def test_ub_acts_as_strict_bound(self):
        inst = triangle()  # optimum 3
        at_opt = bb_search(inst, ub=3)
        assert at_opt.status == "completed" and at_opt.best_count is None
        above = bb_search(inst, ub=4)
        assert above.best_count == 3

    def test_iteration_cap_reports_capped(self):
        inst = next(iter(gen_batch("bb-cap", (20,), (0.3,), (1.0,), (4,))))
        report = bb_search(inst, limits=Limits(iteration_cap=5))
        assert report.status == "capped"
        assert report.nodes == 5

    def test_tiny_deadline_reports_timed_out(self):
        inst = next(iter(gen_batch("bb-time", (30,), (0.3,), (1.0,), (5,))))
        report = bb_search(
            inst, limits=Limits(iteration_cap=None, wall_clock_seconds=1e-7)
        )
        assert report.status == "timed-out"

    def test_prune_disabled_same_value_more_nodes(self):
        lim = Limits(iteration_cap=None, wall_clock_seconds=None)
        for inst in gen_batch("bb-prune", (7, 8), (0.4,), (0.8, 1.0), (3,)):
            fast = bb_search(inst, limits=lim, prune=True)
            full = bb_search(inst, limits=lim, prune=False)
            assert fast.best_count == full.best_count
            assert full.nodes >= fast.nodes

    def test_exact_cap_exhaustion_counts_as_completed(self):
        # when the cap equals the exhaustive node count, the cap never
        # prevented work, so the report must claim completion
        inst = triangle(({1}, {2}, {3}))
        free = bb_search(inst, limits=Limits(iteration_cap=None))
        capped = bb_search(inst, limits=Limits(iteration_cap=free.nodes))
        assert capped.status in ("completed", "certified")
        assert capped.best_count == free.best_count


class TestLimits:
    def test_validation(self):
        with pytest.raises(ValueError):
            Limits(iteration_cap=0)
        with pytest.raises(ValueError):
            Limits(wall_clock_seconds=0.0)
        with pytest.raises(ValueError):
            Limits(restarts=-1)

    def test_defaults(self):
        lim = Limits()
        assert lim.iteration_cap == 5000
        assert lim.wall_clock_seconds == 1800.0
        assert lim.restarts is None


_UNCAPPED = Limits(iteration_cap=None, wall_clock_seconds=None)


class TestElcSolve:
    def test_triangle_optimal(self):
        out = elc_solve(triangle())
        assert out.status == "optimal" and out.colors == 3
        # The clique seed already colors every vertex, so the first restart
        # certifies without expanding a single node.
        assert out.nodes == 0

    def test_search_beyond_seed_counts_nodes(self):
        # P3 with a 2-clique seed: the third vertex needs kernel work.
        inst = make_instance(3, [(0, 1), (1, 2)], [{1, 2}, {1, 2}, {1, 2}])
        out = elc_solve(inst)
        assert out.status == "optimal" and out.colors == 2
        assert out.nodes > 0

    def test_forced_infeasible(self):
        inst = make_instance(2, [(0, 1)], [{1}, {1}])
        assert elc_solve(inst).status == "infeasible"

    def test_empty_instance(self):
        out = elc_solve(make_instance(0, [], []))
        assert out.status == "optimal" and out.colors == 0

    def test_oracle_equivalence_uncapped(self):
        for inst in gen_batch("elc-oracle", (6, 8, 10), (0.2, 0.5), (0.5, 1.0), (2, 3)):
            out = elc_solve(inst, limits=_UNCAPPED)
            truth = brute_force_opt(inst)
            if truth.status == "optimal":
                assert out.status == "optimal"
                assert out.colors == truth.count
                assert validate_coloring(inst, out.coloring).ok
            else:
                assert out.status == "infeasible"

    def test_capped_runs_stay_sound(self):
        lim = Limits(iteration_cap=3, wall_clock_seconds=None)
        for inst in gen_batch("elc-sound", (8,), (0.4, 0.7), (0.8,), (3,), per_combo=3):
            out = elc_solve(inst, limits=lim)
            truth = brute_force_opt(inst)
            if truth.status == "infeasible":
                assert out.status in ("infeasible", "nosolution")
            elif out.colors is not None:
                assert out.colors >= truth.count
                assert validate_coloring(inst, out.coloring).ok
                if out.status == "optimal":
                    assert out.colors == truth.count

    def test_restart_budget_zero_is_inconclusive(self):
        out = elc_solve(triangle(), limits=Limits(restarts=0))
        assert out.status == "nosolution"

    def test_restart_budget_one_keeps_best(self):
        out = elc_solve(triangle(), limits=Limits(restarts=1))
        # the single restart already certifies ub = lb = 3
        assert out.status == "optimal" and out.colors == 3

    def test_timeout_reported(self):
        inst = next(iter(gen_batch("elc-time", (30,), (0.3,), (1.0,), (5,))))
        out = elc_solve(
            inst, limits=Limits(iteration_cap=None, wall_clock_seconds=1e-7)
        )
        assert out.status == "timeout"

    def test_deterministic(self):
        for inst in gen_batch("elc-det", (12,), (0.4,), (0.8,), (3,), per_combo=2):
            assert elc_solve(inst).key() == elc_solve(inst).key()

    def test_heap_selection_matches_scan(self):
        for inst in gen_batch("elc-heap", (10, 13), (0.3, 0.6), (0.8,), (3,)):
            scan = elc_solve(inst, limits=Limits(iteration_cap=40), select="scan")
            heap = elc_solve(inst, limits=Limits(iteration_cap=40), select="heap")
            assert scan.key() == heap.key()


class TestDccSolve:
    def test_disjoint_triangles_reuse_colors(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        inst = make_instance(6, edges, [{1, 2, 3}] * 6)
        out = dcc_solve(inst)
        assert out.status == "optimal" and out.colors == 3

    def test_joined_triangles_form_k6(self):
        edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
        inst = make_instance(6, edges, [set(range(1, 7))] * 6)
        out = dcc_solve(inst)
        assert out.status == "optimal" and out.colors == 6

    def test_k6_with_five_colors_infeasible(self):
        edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
        inst = make_instance(6, edges, [set(range(1, 6))] * 6)
        assert dcc_solve(inst).status == "infeasible"

    def test_oracle_equivalence_uncapped(self):
        for inst in gen_batch("dcc-oracle", (6, 8, 10), (0.2, 0.5), (0.5, 1.0), (2, 3)):
            out = dcc_solve(inst, limits=_UNCAPPED)
            truth = brute_force_opt(inst)
            if truth.status == "optimal":
                assert out.status == "optimal"
                assert out.colors == truth.count
                assert validate_coloring(inst, out.coloring).ok
            else:
                assert out.status == "infeasible"

    def test_never_worse_than_elc_when_both_complete(self):
        for inst in gen_batch("dcc-dom", (10, 12), (0.3, 0.6), (0.6, 1.0), (3,)):
            e = elc_solve(inst, limits=_UNCAPPED)
            d = dcc_solve(inst, limits=_UNCAPPED)
            if e.colors is not None and d.colors is not None:
                assert d.colors <= e.colors

    def test_deterministic(self):
        for inst in gen_batch("dcc-det", (12,), (0.4,), (0.8,), (3,), per_combo=2):
            assert dcc_solve(inst).key() == dcc_solve(inst).key()

    def test_single_vertex(self):
        out = dcc_solve(make_instance(1, [], [{4}]))
        assert out.status == "optimal" and out.colors == 1
