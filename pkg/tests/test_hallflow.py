from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from tensorindep import (
    BIG,
    WeightedGraph,
    build_double_cover,
    condition_network,
    independent_witness_from_set,
    is_independent,
    mask_from,
    max_flow,
    measure_of,
    neighborhood,
    star_graph,
    tensor_product,
    violating_independent_set,
    violating_set,
)

from conftest import measured_graphs
from oracles import brute_violating_any, brute_violating_independent

HALF = Fraction(1, 2)


def flow_is_internally_consistent(net, result):
    """Conservation, capacity bounds, and the min-cut certificate."""
    inflow = {}
    outflow = {}
    for (u, v), f in result.flows.items():
        cap = next(c for (a, b, c) in net.arcs if (a, b) == (u, v))
        assert 0 <= f <= cap
        outflow[u] = outflow.get(u, Fraction(0)) + f
        inflow[v] = inflow.get(v, Fraction(0)) + f
    for node in range(net.graph_nodes):
        assert inflow.get(node, 0) == outflow.get(node, 0), f"node {node} leaks"
    assert outflow.get(net.source, 0) == result.value
    assert inflow.get(net.sink, 0) == result.value
    # Cut capacity equals the flow value (max-flow equals min-cut).
    cut = set(result.cut_source_side) | {net.source}
    capacity = sum(
        c for (u, v, c) in net.arcs if u in cut and v not in cut
    )
    assert capacity == result.value
    return True


class TestDoubleCover:
    def test_k2(self, k2):
        cover = build_double_cover(k2)
        gp = cover.g_prime
        assert gp.n == 4
        assert all(m == Fraction(1, 4) for m in gp.measures)
        assert sorted(gp.edges()) == [(0, 3), (1, 2)]
        assert gp.labels == ("(u,A)", "(v,A)", "(u,B)", "(v,B)")

    def test_k3_cover_is_a_hexagon(self, k3):
        cover = build_double_cover(k3)
        gp = cover.g_prime
        assert gp.n == 6
        assert all(m == Fraction(1, 6) for m in gp.measures)
        assert all(gp.degree(v) == 2 for v in range(6))
        # Connected 2-regular on 6 vertices: a single 6-cycle.
        seen = {0}
        frontier = {0}
        while frontier:
            frontier = {
                w for v in frontier for w in range(6) if gp.has_edge(v, w)
            } - seen
            seen |= frontier
        assert seen == set(range(6))

    def test_edgeless(self):
        g = WeightedGraph([Fraction(1, 3)] * 3, [])
        cover = build_double_cover(g)
        assert cover.g_prime.edge_count() == 0

    def test_sides_partition_and_edges_cross(self, c5):
        cover = build_double_cover(c5)
        assert cover.side_x & cover.side_y == 0
        assert cover.side_x | cover.side_y == cover.g_prime.full_mask
        for u, v in cover.g_prime.edges():
            assert (cover.side_x >> u & 1) != (cover.side_x >> v & 1)

    def test_matches_tensor_product_with_k2(self, p3):
        k2 = WeightedGraph([HALF, HALF], [(0, 1)])
        cover = build_double_cover(p3)
        prod = tensor_product(p3, k2)
        # Cover index z / n+z corresponds to product index 2z / 2z+1.
        relabel = [2 * z for z in range(p3.n)] + [2 * z + 1 for z in range(p3.n)]
        for u in range(cover.g_prime.n):
            assert cover.g_prime.measures[u] == prod.measures[relabel[u]]
            for v in range(cover.g_prime.n):
                assert cover.g_prime.has_edge(u, v) == prod.has_edge(
                    relabel[u], relabel[v]
                )


class TestMaxFlow:
    def test_k2_saturates(self, k2):
        net = condition_network(build_double_cover(k2))
        result = max_flow(net)
        assert result.value == HALF
        assert result.flows[(0, 3)] == Fraction(1, 4)
        assert result.flows[(1, 2)] == Fraction(1, 4)
        assert flow_is_internally_consistent(net, result)

    def test_p3_deficit(self, p3):
        net = condition_network(build_double_cover(p3))
        result = max_flow(net)
        assert result.value == Fraction(1, 3)
        assert flow_is_internally_consistent(net, result)

    def test_edgeless_zero(self):
        g = WeightedGraph([Fraction(1, 2), Fraction(1, 2)], [])
        result = max_flow(condition_network(build_double_cover(g)))
        assert result.value == 0

    def test_big_capacity_is_two(self):
        assert BIG == 2

    @settings(max_examples=60)
    @given(measured_graphs())
    def test_value_never_exceeds_half(self, g):
        net = condition_network(build_double_cover(g))
        result = max_flow(net)
        assert result.value <= HALF
        assert flow_is_internally_consistent(net, result)

    def test_deterministic(self, c7_chord):
        net = condition_network(build_double_cover(c7_chord))
        first = max_flow(net)
        second = max_flow(net)
        assert first.value == second.value
        assert first.flows == second.flows
        assert first.cut_source_side == second.cut_source_side


class TestViolatingSet:
    def test_k2_uniform_none(self, k2):
        assert violating_set(k2) is None

    def test_p3(self, p3):
        q = violating_set(p3)
        assert q == mask_from([0, 2])
        assert measure_of(p3, q) == Fraction(2, 3)
        assert measure_of(p3, neighborhood(p3, q)) == Fraction(1, 3)

    def test_biased_edge(self, k2_biased):
        assert violating_set(k2_biased) == mask_from([0])

    @settings(max_examples=80)
    @given(measured_graphs())
    def test_agrees_with_brute_force(self, g):
        q = violating_set(g)
        brute = brute_violating_any(g)
        assert (q is None) == (brute is None)
        if q is not None:
            assert measure_of(g, q) > measure_of(g, neighborhood(g, q))


class TestWitnessExtraction:
    def test_only_the_isolated_vertex_survives(self):
        g = WeightedGraph(
            [Fraction(1, 2), Fraction(1, 5), Fraction(3, 10)], [(0, 1)], ["a", "b", "c"]
        )
        witness = independent_witness_from_set(g, 0b111)
        assert witness == mask_from([2])
        assert measure_of(g, neighborhood(g, witness)) == 0

    def test_already_independent_set_survives(self, p3):
        assert independent_witness_from_set(p3, mask_from([0, 2])) == mask_from([0, 2])

    def test_singleton(self, k2_biased):
        assert independent_witness_from_set(k2_biased, 1) == 1

    def test_precondition_enforced(self, k2):
        with pytest.raises(ValueError, match="outweigh"):
            independent_witness_from_set(k2, 1)


class TestViolatingIndependentSet:
    def test_p3(self, p3):
        assert violating_independent_set(p3) == mask_from([0, 2])

    def test_k2_uniform(self, k2):
        assert violating_independent_set(k2) is None
        assert brute_violating_independent(k2) is None

    def test_star(self):
        g = star_graph(3)
        assert violating_independent_set(g) == mask_from([1, 2, 3])

    @settings(max_examples=80)
    @given(measured_graphs())
    def test_three_way_agreement(self, g):
        # Flow test, arbitrary-set existence, independent-set existence:
        # all three decide the same condition.
        witness = violating_independent_set(g)
        value = max_flow(condition_network(build_double_cover(g))).value
        brute_any = brute_violating_any(g)
        brute_ind = brute_violating_independent(g)
        assert (witness is None) == (value == HALF)
        assert (brute_any is None) == (brute_ind is None)
        assert (witness is None) == (brute_ind is None)
        if witness is not None:
            assert is_independent(g, witness)
            assert measure_of(g, witness) > measure_of(g, neighborhood(g, witness))

    def test_every_vertex_zero_but_one(self):
        g = WeightedGraph([Fraction(1), Fraction(0)], [(0, 1)])
        assert violating_independent_set(g) == 1
