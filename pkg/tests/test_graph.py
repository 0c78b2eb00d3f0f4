import random

import pytest

from netchrono import (
    Chronology,
    UndirectedGraph,
    WeightedDigraph,
    from_edge_list,
    is_acyclic,
    remove_vertices,
    strongly_connected_components,
)
from netchrono.errors import SelfLoopError, UnknownVertexError

from oracles import random_graph


def test_from_edge_list_path():
    g = from_edge_list([(0, 1), (1, 2)])
    assert g.vertex_count == 3
    assert g.edge_count == 2
    assert g.neighbors(1) == {0, 2}


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list([(0, 1), (1, 0)])
    assert g.vertex_count == 2
    assert g.edge_count == 1


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        from_edge_list([(3, 3)])


def test_from_edge_list_order_independent():
    rng = random.Random(7)
    for _ in range(30):
        pairs = [(rng.randrange(12), rng.randrange(12)) for _ in range(20)]
        pairs = [(u, v) for u, v in pairs if u != v]
        shuffled = pairs[:]
        rng.shuffle(shuffled)
        reversed_pairs = [(v, u) for u, v in pairs]
        assert from_edge_list(pairs) == from_edge_list(shuffled) == from_edge_list(reversed_pairs)


def test_remove_vertices_triangle():
    g = from_edge_list([(0, 1), (1, 2), (0, 2)])
    h = remove_vertices(g, {2})
    assert h.vertices == {0, 1}
    assert h.edge_count == 1
    # original untouched
    assert g.vertex_count == 3 and g.edge_count == 3


def test_remove_vertices_empty_set_is_identity():
    g = from_edge_list([(0, 1), (1, 2), (0, 2)])
    assert remove_vertices(g, set()) == g


def test_remove_vertices_path_middle():
    g = from_edge_list([(0, 1), (1, 2)])
    h = remove_vertices(g, {1})
    assert h.vertices == {0, 2}
    assert h.edge_count == 0


def test_remove_vertices_unknown():
    g = from_edge_list([(0, 1)])
    with pytest.raises(UnknownVertexError):
        remove_vertices(g, {5})


def test_remove_vertices_induced_subgraph_property():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng, 14, 0.25)
        drop = {v for v in g.vertices if rng.random() < 0.4}
        h = remove_vertices(g, drop)
        assert h.vertices | drop == g.vertices
        for u in g.vertices:
            for v in g.neighbors(u):
                expected = u not in drop and v not in drop
                assert h.has_edge(u, v) == expected


def test_adjacency_must_be_symmetric():
    with pytest.raises(ValueError):
        UndirectedGraph({0: [1], 1: []})


def test_scc_mutual_pair():
    dg = WeightedDigraph([0, 1], {(0, 1): 0.9, (1, 0): 0.8})
    assert strongly_connected_components(dg) == [frozenset({0, 1})]


def test_scc_chain_is_singletons():
    dg = WeightedDigraph([0, 1, 2], {(0, 1): 0.9, (1, 2): 0.8})
    assert strongly_connected_components(dg) == [
        frozenset({0}), frozenset({1}), frozenset({2})]


def test_scc_classic():
    dg = WeightedDigraph(
        [0, 1, 2, 3], {(0, 1): 0.9, (1, 2): 0.9, (2, 0): 0.9, (2, 3): 0.9})
    assert strongly_connected_components(dg) == [frozenset({0, 1, 2}), frozenset({3})]


def test_is_acyclic_examples():
    chain = WeightedDigraph([0, 1, 2], {(0, 1): 0.9, (1, 2): 0.8})
    assert is_acyclic(chain)
    two_cycle = WeightedDigraph([0, 1], {(0, 1): 0.9, (1, 0): 0.8})
    assert not is_acyclic(two_cycle)
    assert is_acyclic(WeightedDigraph([], {}))


def test_is_acyclic_iff_singleton_sccs():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 10)
        edges = {}
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < 0.2:
                    edges[(u, v)] = 0.75
        dg = WeightedDigraph(range(n), edges)
        singletons = all(len(b) == 1 for b in strongly_connected_components(dg))
        assert is_acyclic(dg) == singletons


def test_weighted_digraph_validation():
    with pytest.raises(ValueError):
        WeightedDigraph([0, 1], {(0, 1): 0.4})
    with pytest.raises(ValueError):
        WeightedDigraph([0, 1], {(0, 1): 1.2})
    with pytest.raises(UnknownVertexError):
        WeightedDigraph([0, 1], {(0, 2): 0.7})


def test_weighted_digraph_accessors():
    dg = WeightedDigraph([3, 1, 2], {(1, 3): 0.6, (2, 1): 1.0})
    assert dg.vertices == {1, 2, 3}
    assert dg.edge_count == 2
    assert dg.weight(1, 3) == 0.6
    assert dg.has_edge(2, 1) and not dg.has_edge(1, 2)
    assert sorted(dg.edges()) == [((1, 3), 0.6), ((2, 1), 1.0)]


def test_chronology_rejects_duplicates():
    with pytest.raises(ValueError):
        Chronology([1, 2, 1])


def test_chronology_positions():
    c = Chronology([4, 2, 7])
    assert c.index_of(2) == 1
    assert list(c) == [4, 2, 7]
    assert len(c) == 3
