import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import edge_set, local_complement_nx, pivot_nx, to_nx
from vmkit import Graph, GraphError, delete_vertices, induced_subgraph, local_complement, pivot
from vmkit.graph import MutableGraph, compact, relabel


def same(g, h_nx):
    return set(g.vertices()) == set(h_nx) and edge_set(g) == {frozenset(e) for e in h_nx.edges()}


@given(graphs(min_n=1), st.data())
def test_lc_matches_neighbourhood_complement(g, data):
    v = data.draw(st.sampled_from(g.vertices()))
    assert same(local_complement(g, v), local_complement_nx(to_nx(g), v))


@given(graphs(min_n=2), st.data())
def test_pivot_matches_three_class_rule(g, data):
    es = list(g.edges())
    if not es:
        return
    x, y = data.draw(st.sampled_from(es))
    assert same(pivot(g, x, y), pivot_nx(to_nx(g), x, y))


@given(graphs(min_n=1), st.data())
def test_lc_is_involution(g, data):
    v = data.draw(st.sampled_from(g.vertices()))
    assert local_complement(local_complement(g, v), v) == g


def test_pivot_needs_an_edge():
    with pytest.raises(GraphError):
        pivot(Graph(3, [(0, 1)]), 0, 2)


def test_rejects_loops_and_bad_ids():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(-1)


def test_deleted_ids_stay_stable():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h = delete_vertices(g, [2])
    assert h.vertices() == [0, 1, 3, 4]
    assert h.n == 5 and h.order == 4
    assert list(h.edges()) == [(0, 1), (3, 4)]
    with pytest.raises(GraphError):
        h.neighbors(2)


def test_induced_subgraph_and_compact():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    h = induced_subgraph(g, [1, 2, 4])
    c, index = compact(h)
    assert c.n == 3
    assert index == {1: 0, 2: 1, 4: 2}
    assert list(c.edges()) == [(0, 1)]


@given(graphs(max_n=8))
def test_sparse_and_dense_agree(g):
    s = Graph(g.n, g.edges(), sparse=True)
    assert edge_set(s) == edge_set(g)
    for v in g.vertices():
        assert s.neighbors(v) == g.neighbors(v)
        assert edge_set(local_complement(s, v)) == edge_set(local_complement(g, v))


def test_mutable_round_trip():
    g = Graph(4, [(0, 1), (1, 2)])
    w = g.thaw()
    w.local_complement(1)
    w.delete(3)
    h = w.freeze()
    assert h.adjacent(0, 2)
    assert 3 not in h
    assert isinstance(w.copy(), MutableGraph)


def test_relabel_permutes_edges():
    g = Graph(3, [(0, 1)])
    h = relabel(g, [2, 0, 1])
    assert list(h.edges()) == [(0, 2)]
