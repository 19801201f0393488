import pytest

from domchain import decompose, oracle
from domchain.graph import Graph, cycle_graph, disjoint_union, path_graph
from domchain.poly import DomPoly
from conftest import random_connected_graph, random_disconnected_graph


class TestVertexRecurrence:
    def test_zero_vertex_graph(self):
        assert decompose.vertex_recurrence(Graph.from_edges(0, [])) == DomPoly.one()

    def test_matches_oracle_at_every_pivot(self):
        g = cycle_graph(5).append_pendant(2)
        want = oracle.domination_polynomial(g)
        for u in range(g.n):
            assert decompose.vertex_recurrence(g, u) == want

    def test_matches_oracle_random(self, rng):
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(4, 11))
            assert decompose.vertex_recurrence(g) == oracle.domination_polynomial(g)

    def test_recurses_above_leaf_threshold(self, rng):
        g = random_connected_graph(rng, 13)
        got = decompose.vertex_recurrence(g, leaf_threshold=6, memo={})
        assert got == oracle.domination_polynomial(g)

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            decompose.vertex_recurrence(path_graph(3), 5)

    def test_pivot_policy_prefers_degree_then_low_label(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert decompose.max_degree_vertex(g) == 1  # tie between 1 and 2


class TestEdgeRecurrence:
    def test_matches_oracle_at_every_edge(self):
        g = cycle_graph(4).append_pendant(0)
        want = oracle.domination_polynomial(g)
        for u, v in g.edges():
            assert decompose.edge_recurrence(g, u, v) == want

    def test_bracket_vanishes_at_one(self, rng):
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(4, 10))
            u, v = next(g.edges())
            _, bracket = decompose.edge_recurrence_bracket(g, u, v)
            assert bracket.eval_at(1) == 0

    def test_matches_oracle_random(self, rng):
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(4, 11))
            assert decompose.edge_recurrence(g) == oracle.domination_polynomial(g)

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            decompose.edge_recurrence(path_graph(4), 0, 3)

    def test_edgeless_graph_rejected(self):
        with pytest.raises(ValueError):
            decompose.edge_recurrence(Graph.from_edges(3, []))


class TestComponentsProduct:
    def test_empty_graph_gives_one(self):
        assert decompose.components_product(Graph.from_edges(0, [])) == DomPoly.one()

    def test_two_known_components(self):
        g = disjoint_union(cycle_graph(4), path_graph(3))
        want = DomPoly((0, 0, 6, 4, 1)) * DomPoly((0, 1, 3, 1))
        assert decompose.components_product(g) == want
        assert oracle.domination_polynomial(g) == want

    def test_matches_oracle_random(self, rng):
        for _ in range(10):
            g = random_disconnected_graph(rng)
            assert decompose.components_product(g) == oracle.domination_polynomial(g)

    def test_isolated_vertices(self):
        g = Graph.from_edges(3, [])
        assert decompose.components_product(g) == DomPoly((0, 0, 0, 1))


class TestMemo:
    def test_shared_memo_is_reused_and_consistent(self, rng):
        g = random_connected_graph(rng, 12)
        memo = {}
        first = decompose.vertex_recurrence(g, leaf_threshold=6, memo=memo)
        assert memo  # something was cached
        size = len(memo)
        second = decompose.vertex_recurrence(g, leaf_threshold=6, memo=memo)
        assert first == second == oracle.domination_polynomial(g)
        assert len(memo) == size
