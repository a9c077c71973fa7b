import random

import pytest

from domcontract.contraction import decide_kec
from domcontract.domination import gamma_number
from domcontract.generate import all_connected_up_to, random_connected_graph, random_tree
from domcontract.graph import Graph, complete_graph, contract_edge, cycle_graph, path_graph
from domcontract.treewidth import (
    InvalidDecompositionError,
    TdParseError,
    TreeDecomposition,
    contract_decomposition,
    decide_kec_via_treewidth,
    format_td,
    gamma_via_treewidth,
    heuristic_tree_decomposition,
    parse_td,
    path_decomposition_of_path,
    validate_decomposition,
)


def test_examples(h):
    assert gamma_via_treewidth(path_graph(7), path_decomposition_of_path(7)).gamma == 3
    assert gamma_via_treewidth(h).gamma == 3
    assert gamma_via_treewidth(cycle_graph(6)).gamma == 2


def test_heuristic_widths():
    rng = random.Random(2)
    assert heuristic_tree_decomposition(random_tree(15, rng)).width == 1
    assert heuristic_tree_decomposition(cycle_graph(5)).width == 2
    assert heuristic_tree_decomposition(complete_graph(5)).width == 4


def test_disconnected_graph_decomposition():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    td = heuristic_tree_decomposition(g)
    validate_decomposition(g, td)
    assert gamma_via_treewidth(g).gamma == 3


def test_dp_matches_branch_and_bound_exhaustive():
    for g in all_connected_up_to(7):
        assert gamma_via_treewidth(g).gamma == gamma_number(g)


def test_dp_random_and_witness():
    rng = random.Random(9)
    for _ in range(40):
        g = random_connected_graph(rng.randint(10, 25), 0.1, rng)
        res = gamma_via_treewidth(g)
        assert res.gamma == gamma_number(g)
        assert res.witness.is_dominating and res.witness.size == res.gamma
        assert gamma_via_treewidth(g, witness=False).gamma == res.gamma


def test_contracted_decomposition_is_valid():
    rng = random.Random(4)
    for _ in range(30):
        g = random_connected_graph(rng.randint(5, 15), 0.2, rng)
        td = heuristic_tree_decomposition(g)
        e = rng.choice(g.edges())
        h, mapping = contract_edge(g, e)
        ctd = contract_decomposition(td, mapping)
        validate_decomposition(h, ctd)
        assert ctd.width <= td.width


def test_kec_via_dp_matches():
    for g in all_connected_up_to(6, min_n=2):
        for k in (1, 2):
            assert bool(decide_kec_via_treewidth(g, k)) == bool(decide_kec(g, k))
    with pytest.raises(ValueError):
        decide_kec_via_treewidth(path_graph(4), 3)


def test_pace_round_trip():
    g = cycle_graph(8)
    td = heuristic_tree_decomposition(g)
    back, n = parse_td(format_td(td, g.n))
    assert n == g.n and back == td


@pytest.mark.parametrize("text, line", [
    ("b 1 1 2\n", 1),
    ("s td 1 2 3\nb 1 1 9\n", 2),
    ("s td 1 2 3\nb 2 1 2\n", 2),
    ("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 x\n", 4),
    ("s td 1 2 3\n", 0),
    ("c only a comment\n", 0),
])
def test_pace_errors(text, line):
    with pytest.raises(TdParseError) as info:
        parse_td(text)
    assert info.value.lineno == line


@pytest.mark.parametrize("td, fragment", [
    (TreeDecomposition((frozenset({0, 1}), frozenset({1, 2})), ()), "tree"),
    (TreeDecomposition((frozenset({0, 1}),), ()), "vertex coverage"),
    (TreeDecomposition((frozenset({0, 1}), frozenset({2})), ((0, 1),)), "edge coverage"),
    (TreeDecomposition((frozenset({0, 1}), frozenset({1, 2}), frozenset({0})),
                       ((0, 1), (1, 2))), "connectivity"),
])
def test_invalid_decompositions(td, fragment):
    with pytest.raises(InvalidDecompositionError, match=fragment):
        validate_decomposition(path_graph(3), td)
