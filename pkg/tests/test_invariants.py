import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kended.errors import CapExceededError
from kended.families import GraphFamilySpec, make_family
from kended.graphs import Graph, VertexSet
from kended.invariants import (
    ConnectivityValue,
    enumerate_maximum_independent_subsets,
    hypothesis_holds,
    independence_number,
    local_connectivity,
    set_connectivity,
    set_connectivity_pair,
)

from conftest import graph_with_subset, graphs
from oracles import (
    independent_sets_by_enumeration,
    max_internally_disjoint_paths,
    vertex_connectivity_by_cuts,
)


def kmm(m, k):
    return make_family(GraphFamilySpec("complete-bipartite", (m, k)))


def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


# ConnectivityValue semantics


def test_connectivity_value_ordering():
    inf = ConnectivityValue.INFINITE
    assert inf.is_infinite
    assert inf > 10**9
    assert inf >= inf and inf == inf
    assert not inf < inf
    assert ConnectivityValue(3) == 3
    assert ConnectivityValue(3) < ConnectivityValue(4)
    assert ConnectivityValue(3) < inf
    assert ConnectivityValue(0) <= 0
    assert inf != 7


def test_connectivity_value_json_and_repr():
    assert ConnectivityValue.INFINITE.to_json() == "infinity"
    assert ConnectivityValue(2).to_json() == 2
    assert str(ConnectivityValue.INFINITE) == "infinity"
    with pytest.raises(ValueError):
        ConnectivityValue(-1)


def test_hypothesis_holds_with_infinite_kappa():
    assert hypothesis_holds(10**6, 2, ConnectivityValue.INFINITE)
    assert hypothesis_holds(4, 2, ConnectivityValue(3))
    assert not hypothesis_holds(4, 2, ConnectivityValue(2))


# independence numbers


def test_alpha_on_k34_larger_part():
    graph, subset = kmm(3, 1)
    assert independence_number(graph, subset).size == 4


def test_alpha_singleton():
    g = c5()
    w = independence_number(g, VertexSet.from_vertices(5, [3]))
    assert w.size == 1
    assert w.witness.to_list() == [3]


def test_alpha_c5_is_two():
    # frozen from the subset-enumeration oracle over all 32 subsets
    g = c5()
    alpha, _ = independent_sets_by_enumeration(g, g.full_mask)
    assert alpha == 2
    w = independence_number(g, VertexSet.full(5))
    assert w.size == 2
    assert w.witness.to_list() not in ([],)
    assert all(not g.has_edge(u, v) for u in w.witness for v in w.witness if u < v)


def test_alpha_empty_set_is_zero():
    g = c5()
    assert independence_number(g, VertexSet.empty(5)).size == 0


def test_alpha_range_check():
    with pytest.raises(ValueError):
        independence_number(c5(), VertexSet.full(4))


def test_enumerate_maximum_independent_subsets_c4():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    sets = enumerate_maximum_independent_subsets(g, VertexSet.full(4))
    assert [s.to_list() for s in sets] == [[0, 2], [1, 3]]


def test_enumerate_maximum_independent_subsets_k3():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    sets = enumerate_maximum_independent_subsets(g, VertexSet.full(3))
    assert [s.to_list() for s in sets] == [[0], [1], [2]]


def test_enumerate_maximum_independent_subsets_k23():
    graph, _ = kmm(2, 1)
    sets = enumerate_maximum_independent_subsets(graph, VertexSet.full(5))
    assert [s.to_list() for s in sets] == [[2, 3, 4]]


def test_enumerate_empty_subset():
    sets = enumerate_maximum_independent_subsets(c5(), VertexSet.empty(5))
    assert [s.to_list() for s in sets] == [[]]


def test_enumerate_cap():
    g = Graph.from_edges(6, [])    # every 3-subset of 6 isolated vertices is independent
    with pytest.raises(CapExceededError):
        enumerate_maximum_independent_subsets(g, VertexSet.full(6), cap=0)


# local connectivity


def test_local_connectivity_k4():
    k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    # frozen from the disjoint-path packing oracle
    assert max_internally_disjoint_paths(k4, 0, 1) == 3
    assert local_connectivity(k4, 0, 1) == 3


def test_local_connectivity_cut_vertex():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert local_connectivity(g, 0, 2) == 1


def test_local_connectivity_k34_within_large_part():
    graph, _ = kmm(3, 1)
    # all paths route through the 3 small-part vertices
    assert max_internally_disjoint_paths(graph, 3, 4) == 3
    assert local_connectivity(graph, 3, 4) == 3


def test_local_connectivity_errors():
    with pytest.raises(ValueError):
        local_connectivity(c5(), 2, 2)
    with pytest.raises(ValueError):
        local_connectivity(c5(), 0, 9)


# set connectivity


def test_set_connectivity_singleton_infinite():
    value = set_connectivity(c5(), VertexSet.from_vertices(5, [2]))
    assert value.is_infinite
    assert set_connectivity(c5(), VertexSet.empty(5)).is_infinite


def test_set_connectivity_kmm_cell():
    graph, subset = kmm(2, 3)
    assert set_connectivity(graph, subset) == 2


def test_set_connectivity_disconnected_zero():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    value, pair = set_connectivity_pair(g, VertexSet.from_vertices(4, [0, 2]))
    assert value == 0
    assert pair == (0, 2)


def test_set_connectivity_full_equals_classical():
    g = c5()
    assert set_connectivity(g, VertexSet.full(5)) == vertex_connectivity_by_cuts(g)


# oracle agreement and properties


@settings(max_examples=60)
@given(graph_with_subset(max_n=6))
def test_alpha_matches_enumeration(data):
    graph, smask = data
    expected, expected_sets = independent_sets_by_enumeration(graph, smask)
    witness = independence_number(graph, VertexSet(graph.n, smask))
    assert witness.size == expected
    found = enumerate_maximum_independent_subsets(graph, VertexSet(graph.n, smask))
    assert [s.mask for s in found] == expected_sets
    # witness audits: inside S, independent, of the right size
    assert witness.witness.mask & ~smask == 0
    assert len(witness.witness) == expected


@settings(max_examples=40)
@given(graph_with_subset(max_n=7), st.randoms(use_true_random=False))
def test_alpha_monotone_on_subset_chains(data, rnd):
    graph, smask = data
    sub = smask
    # random sub-subset chain
    for v in list(range(graph.n)):
        if rnd.random() < 0.3:
            sub &= ~(1 << v)
    big = independence_number(graph, VertexSet(graph.n, smask)).size
    small = independence_number(graph, VertexSet(graph.n, sub)).size
    assert small <= big


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=6))
def test_local_connectivity_symmetric_and_exact(graph):
    rng = random.Random(graph.rows[0] * 31 + graph.n)
    pairs = [(x, y) for x in range(graph.n) for y in range(x + 1, graph.n)]
    rng.shuffle(pairs)
    for x, y in pairs[:3]:
        forward = local_connectivity(graph, x, y)
        assert forward == local_connectivity(graph, y, x)
        assert forward == max_internally_disjoint_paths(graph, x, y)


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=6))
def test_set_connectivity_full_matches_cut_oracle(graph):
    assert set_connectivity(graph, VertexSet.full(graph.n)) == vertex_connectivity_by_cuts(graph)
