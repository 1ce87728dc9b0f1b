import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathcolor.graph import (
    FlowGraph,
    GraphError,
    NodeType,
    build_path,
    diameter,
    node_type,
    parse_graph_text,
    r_hop_neighbors,
)


def test_build_path_shape():
    g = build_path(4)
    assert g.node_count == 4
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.neighbors(0) == (1,)
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 1 and g.degree(2) == 2
    assert g.is_path()
    assert g.path_order() == (0, 1, 2, 3)


def test_single_node_path():
    g = build_path(1)
    assert g.edges == ()
    assert g.is_path()
    assert g.path_order() == (0,)
    assert diameter(g) == 0


def test_edges_normalized_and_sorted():
    g = FlowGraph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.is_path()


def test_scrambled_path_order():
    # path 2-0-1: endpoints 1 and 2
    g = FlowGraph(3, [(0, 2), (0, 1)])
    assert g.path_order() in ((1, 0, 2), (2, 0, 1))
    assert g.path_order()[0] == min(v for v in range(3) if g.degree(v) == 1)


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        FlowGraph(3, [(0, 0)])
    with pytest.raises(GraphError):
        FlowGraph(3, [(0, 3)])
    with pytest.raises(GraphError):
        FlowGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        FlowGraph(0, [])


def test_rejects_disconnected():
    with pytest.raises(GraphError):
        FlowGraph(4, [(0, 1), (2, 3)])


def test_cycle_is_not_path():
    g = FlowGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not g.is_path()
    with pytest.raises(GraphError):
        g.path_order()
    assert diameter(g) == 2


def test_distances_and_hops():
    g = build_path(5)
    d = g.distances_from(0)
    assert d == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4}
    assert r_hop_neighbors(g, 2, 1) == frozenset({1, 3})
    assert r_hop_neighbors(g, 2, 2) == frozenset({0, 4})
    assert r_hop_neighbors(g, 2, 3) == frozenset()
    assert r_hop_neighbors(g, 2, 0) == frozenset({2})
    with pytest.raises(GraphError):
        r_hop_neighbors(g, 2, -1)


def test_node_type():
    g = build_path(4)
    assert node_type(g, 0) == NodeType(degree=1, neighbor_degrees=(2,))
    assert node_type(g, 1) == NodeType(degree=2, neighbor_degrees=(1, 2))
    assert node_type(g, 1) == node_type(g, 2)
    with pytest.raises(GraphError):
        NodeType(degree=2, neighbor_degrees=(1,))


def test_diameter_path():
    for n in range(2, 8):
        assert diameter(build_path(n)) == n - 1


def test_parse_graph_text():
    g = parse_graph_text("# a path\nn 4\ne 1 2\ne 2 3\ne 3 4\n")
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.is_path()


def test_parse_graph_text_errors():
    with pytest.raises(GraphError, match="line 1"):
        parse_graph_text("e 1 2\nn 3\n")
    with pytest.raises(GraphError, match="line 2"):
        parse_graph_text("n 3\nq 1 2\n")
    with pytest.raises(GraphError, match="out of 1"):
        parse_graph_text("n 3\ne 1 4\n")
    with pytest.raises(GraphError, match="missing n"):
        parse_graph_text("# nothing\n")
    with pytest.raises(GraphError, match="duplicate n"):
        parse_graph_text("n 3\nn 3\n")


@given(st.integers(min_value=1, max_value=40))
def test_path_invariants(n):
    g = build_path(n)
    assert g.is_path()
    assert g.path_order() == tuple(range(n))
    assert len(g.edges) == n - 1


@given(st.integers(min_value=2, max_value=12), st.data())
def test_distance_symmetry(n, data):
    g = build_path(n)
    u = data.draw(st.integers(min_value=0, max_value=n - 1))
    v = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert g.distances_from(u)[v] == g.distances_from(v)[u] == abs(u - v)
