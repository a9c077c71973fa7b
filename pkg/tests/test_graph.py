import itertools
import random

import pytest
from hypothesis import given, settings

from domcontract.generate import connected_graphs, is_isomorphic, random_connected_graph
from domcontract.graph import (
    DisconnectedGraphError,
    Edge,
    EdgeListParseError,
    Graph,
    GraphError,
    InvalidEdgeError,
    are_false_twins,
    are_true_twins,
    complete_graph,
    contract_edge,
    contract_sequence,
    cycle_graph,
    delete_vertices,
    distance,
    format_edge_list,
    format_labels,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    parse_labels,
    path_graph,
    require_connected,
    shortest_path,
    star_graph,
    subdivide_all_edges_3,
    subdivide_edge,
)

from conftest import graphs


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b01), labels=("a",))
    with pytest.raises(InvalidEdgeError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(InvalidEdgeError):
        Graph.from_edges(3, [(1, 1)])


def test_edge_normalized():
    assert Edge.of(5, 2) == Edge(2, 5)
    with pytest.raises(InvalidEdgeError):
        Edge.of(1, 1)


def test_contract_p3_to_p2():
    g, mapping = contract_edge(path_graph(3), (0, 1))
    assert (g.n, g.m) == (2, 1)
    assert mapping == [0, 0, 1]


def test_contract_triangle_to_k2():
    for e in cycle_graph(3).edges():
        g, _ = contract_edge(cycle_graph(3), e)
        assert is_isomorphic(g, complete_graph(2))


def test_contract_c4_to_c3():
    g, _ = contract_edge(cycle_graph(4), (0, 1))
    assert is_isomorphic(g, cycle_graph(3))


def test_contract_neighbourhood_is_union():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 2), (3, 4)])
    h, mapping = contract_edge(g, (0, 1))
    merged = mapping[0]
    assert mapping[1] == merged
    expected = {mapping[w] for w in (2, 3)}
    assert h.neighborhood(merged) == expected


def test_contract_rejects_non_edge():
    with pytest.raises(InvalidEdgeError):
        contract_edge(path_graph(3), (0, 2))


def test_contract_keeps_labels():
    g = Graph.from_edges(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])
    h, _ = contract_edge(g, (1, 2))
    assert h.labels == ("a", "b+c")


@given(graphs(min_n=2, max_n=10))
@settings(max_examples=150, deadline=None)
def test_contraction_properties(g):
    for e in g.edges():
        h, mapping = contract_edge(g, e)
        assert h.n == g.n - 1
        Graph(h.n, h.adj)  # full validation: symmetric, loop-free
        assert is_connected(h)
        assert sorted(set(mapping)) == list(range(h.n))


def test_subdivide_examples():
    k2 = complete_graph(2)
    assert is_isomorphic(subdivide_edge(k2, (0, 1), 3), path_graph(5))
    assert is_isomorphic(subdivide_edge(cycle_graph(3), (0, 1), 3), cycle_graph(6))
    assert is_isomorphic(subdivide_edge(cycle_graph(4), (0, 1), 1), cycle_graph(5))


def test_subdivide_orientation_and_labels():
    g = Graph.from_edges(2, [(0, 1)], labels=["u", "v"])
    s = subdivide_edge(g, (0, 1), 3)
    assert s.labels[2:] == ("e1[u,v]", "e2[u,v]", "e3[u,v]")
    assert s.has_edge(0, 2) and s.has_edge(4, 1) and not s.has_edge(0, 1)
    with pytest.raises(GraphError):
        subdivide_edge(g, (0, 1), 0)


def test_subdivide_all_examples():
    assert is_isomorphic(subdivide_all_edges_3(complete_graph(2)), path_graph(5))
    assert is_isomorphic(subdivide_all_edges_3(cycle_graph(3)), cycle_graph(12))
    assert is_isomorphic(subdivide_all_edges_3(path_graph(3)), path_graph(9))


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=60, deadline=None)
def test_subdivide_all_counts(g):
    s = subdivide_all_edges_3(g)
    assert (s.n, s.m) == (g.n + 3 * g.m, 4 * g.m)
    for u, v in g.edges():
        assert distance(s, u, v) == 4


def test_subdivide_then_contract_round_trip():
    for n in range(2, 7):
        for g in connected_graphs(n):
            for e in g.edges()[:3]:
                s = subdivide_edge(g, e, 3)
                u, v = e
                # three contractions shrink u-e1-e2-e3-v back to one edge
                path = [u, g.n, g.n + 1, g.n + 2]
                h, _ = contract_sequence(s, _chain(s, list(zip(path, path[1:]))))
                assert is_isomorphic(h, g)


def _chain(g, edges):
    from domcontract.contraction import chain_edges

    return chain_edges(g, edges)


def test_distance_examples():
    p4 = path_graph(4)
    assert distance(p4, 0, 3) == 3
    assert distance(p4, 2, 2) == 0
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert distance(two, 0, 3) is None
    assert shortest_path(two, 0, 3) is None
    with pytest.raises(GraphError):
        distance(p4, 0, 9)


def test_distance_metric_on_random_graphs():
    rng = random.Random(3)
    for _ in range(30):
        g = random_connected_graph(rng.randint(2, 20), 0.15, rng)
        for u, v, w in itertools.islice(itertools.permutations(range(g.n), 3), 400):
            assert distance(g, u, v) == distance(g, v, u)
            assert distance(g, u, w) <= distance(g, u, v) + distance(g, v, w)


def test_twins():
    k3 = complete_graph(3)
    assert all(are_true_twins(k3, u, v) for u, v in itertools.combinations(range(3), 2))
    c4 = cycle_graph(4)
    assert are_false_twins(c4, 0, 2) and not are_true_twins(c4, 0, 2)
    assert are_false_twins(path_graph(3), 0, 2)
    with pytest.raises(GraphError):
        are_true_twins(k3, 1, 1)
    with pytest.raises(GraphError):
        are_false_twins(k3, 0, 0)


def test_induced_subgraph_examples():
    p, mapping = induced_subgraph(cycle_graph(5), [0, 1, 2, 3])
    assert is_isomorphic(p, path_graph(4))
    assert mapping == {0: 0, 1: 1, 2: 2, 3: 3}
    empty, _ = induced_subgraph(cycle_graph(5), [])
    assert empty.n == 0
    full, _ = induced_subgraph(cycle_graph(5), range(5))
    assert is_isomorphic(full, cycle_graph(5))
    with pytest.raises(GraphError):
        induced_subgraph(cycle_graph(5), [7])
    assert is_isomorphic(delete_vertices(cycle_graph(5), [4]), path_graph(4))


def test_neighborhood():
    s = star_graph(3)
    assert s.neighborhood(0) == {1, 2, 3}
    assert s.neighborhood(1, closed=True) == {0, 1}
    with pytest.raises(GraphError):
        s.neighborhood(4)


def test_connectivity():
    assert is_connected(path_graph(4))
    assert not is_connected(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(DisconnectedGraphError):
        require_connected(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(DisconnectedGraphError):
        require_connected(Graph.empty(0))


def test_edge_list_round_trip():
    g = cycle_graph(5)
    assert parse_edge_list(format_edge_list(g)) == g
    text = "# a comment\n3 2\n0 1\n# another\n1 2\n"
    assert parse_edge_list(text).m == 2


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 0\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 1\n0 x\n", 2),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list(text)
    assert info.value.lineno == line
    assert f"line {line}" in str(info.value)


def test_edge_list_count_mismatch():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 2\n0 1\n")


def test_labels_round_trip():
    g = Graph.from_edges(2, [(0, 1)], labels=["H:1", "x[2]"])
    assert parse_labels(format_labels(g), 2) == ("H:1", "x[2]")
    with pytest.raises(EdgeListParseError):
        parse_labels("0 a\n", 2)
