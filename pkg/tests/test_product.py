import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path
from doublegraph.graph import Graph, is_bipartite, is_connected, is_eulerian
from doublegraph.product import (
    EmptyFactor,
    LayerOutOfRange,
    NotDouble,
    ReflexiveGraph,
    ZeroOrder,
    cross_layer_subgraph,
    double_n,
    kronecker,
    layer_subgraph,
    total_graph,
)
from oracles import isomorphic

K2_PLAIN = ReflexiveGraph(2, ((0, 1),))


def test_total_graphs():
    t1 = total_graph(1)
    assert (t1.p, t1.edges, t1.loops) == (1, (), frozenset({0}))
    t2 = total_graph(2)
    assert t2.edges == ((0, 1),) and t2.loops == frozenset({0, 1})
    t3 = total_graph(3)
    assert len(t3.edges) == 3 and len(t3.loops) == 3
    with pytest.raises(ZeroOrder):
        total_graph(0)


def test_kronecker_with_plain_k2_is_bipartite_double_cover():
    g = kronecker(cycle(3), K2_PLAIN)
    c6 = cycle(6)
    assert isomorphic(g.p, g.edges, c6.p, c6.edges)


def test_k2_times_t2_is_c4():
    g = kronecker(complete(2), total_graph(2))
    c4 = cycle(4)
    assert isomorphic(g.p, g.edges, c4.p, c4.edges)
    # every edge joins a copy of vertex 0 to a copy of vertex 1
    assert all((u % 2) != (v % 2) for u, v in g.edges)


@given(graphs(max_p=6))
def test_identity_factor(g):
    assert kronecker(g, total_graph(1)) == g


def test_empty_factor():
    with pytest.raises(EmptyFactor):
        kronecker(Graph(0), total_graph(2))
    with pytest.raises(EmptyFactor):
        double_n(Graph(0), 2)


def test_double_of_p3():
    d = double_n(path(3), 2)
    assert (d.graph.p, d.graph.q) == (6, 8)
    assert d.graph.degrees() == [2, 4, 2, 2, 4, 2]


def test_double_of_k1_is_edgeless():
    d = double_n(Graph(1), 5)
    assert (d.graph.p, d.graph.q) == (5, 0)


def test_d3_of_c4():
    h = double_n(cycle(4), 3).graph
    assert (h.p, h.q) == (12, 36)
    assert set(h.degrees()) == {6}


def test_layers():
    d = double_n(cycle(5), 2)
    assert layer_subgraph(d, 0) == cycle(5)
    assert layer_subgraph(double_n(complete(4), 3), 2) == complete(4)
    with pytest.raises(LayerOutOfRange):
        layer_subgraph(d, 2)


def test_cross_layer():
    r = cross_layer_subgraph(double_n(complete(2), 2))
    assert r.edges == ((0, 3), (1, 2))
    r = cross_layer_subgraph(double_n(cycle(3), 2))
    c6 = cycle(6)
    assert isomorphic(r.p, r.edges, c6.p, c6.edges)
    with pytest.raises(NotDouble):
        cross_layer_subgraph(double_n(cycle(3), 3))


@given(graphs(max_p=6))
def test_cross_layer_has_twice_the_edges(g):
    assert cross_layer_subgraph(double_n(g, 2)).q == 2 * g.q


@given(graphs(max_p=6), st.integers(1, 4))
def test_layer_laws(g, n):
    d = double_n(g, n)
    h = d.graph
    assert h == kronecker(g, total_graph(n))
    assert h.p == n * g.p and h.q == n * n * g.q
    for u in range(g.p):
        for i in range(n):
            assert h.degree(d.vid(u, i)) == n * g.degree(u)
            assert d.split(d.vid(u, i)) == (u, i)
    for i in range(n):
        assert layer_subgraph(d, i) == g
    for u in range(g.p):
        for v in range(g.p):
            for i in range(n):
                for j in range(n):
                    if d.vid(u, i) != d.vid(v, j):
                        assert h.has_edge(d.vid(u, i), d.vid(v, j)) == g.has_edge(u, v)


@settings(max_examples=150)
@given(graphs(min_p=2, max_p=6), st.sampled_from([2, 3]))
def test_structural_iffs(g, n):
    h = double_n(g, n).graph
    assert is_connected(h) == is_connected(g)
    assert is_bipartite(h) == is_bipartite(g)
    if is_connected(g):
        assert is_eulerian(h) == (is_eulerian(g) or n % 2 == 0)
