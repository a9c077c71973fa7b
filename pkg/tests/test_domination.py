import itertools
import random

import pytest
from hypothesis import given, settings

from domcontract.contraction import induced_edges
from domcontract.domination import (
    DominationCertificate,
    Exceeds,
    WorkBudgetExceeded,
    all_dominating_sets_of_size,
    enumerate_minimum_dominating_sets,
    find_gamma_plus_one_with_two_edges,
    find_nonstable_mds,
    gamma,
    gamma_bounded,
    gamma_number,
)
from domcontract.generate import all_connected_up_to, connected_graphs, random_connected_graph
from domcontract.graph import (
    Graph,
    GraphError,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_vertices,
    induced_edge_count,
    mask_of,
    path_graph,
    star_graph,
)

from conftest import graphs, h_ids


def brute_gamma(g):
    return next(k for k in range(1, g.n + 1) if any(True for _ in all_dominating_sets_of_size(g, k)))


def recheck(g, cert):
    fresh = DominationCertificate.of(g, cert.vertices)
    assert fresh == cert
    assert cert.size == len(cert.vertices)
    assert cert.is_stable == (cert.induced_edge_count == 0)
    assert cert.induced_edge_count == induced_edge_count(g, mask_of(cert.vertices))
    return fresh


def test_certificate_fields():
    c = DominationCertificate.of(path_graph(4), [2, 1])
    assert c.vertices == (1, 2) and c.size == 2
    assert c.is_dominating and not c.is_stable and c.induced_edge_count == 1
    assert str(c) == "size 2: 1 2"
    assert not DominationCertificate.of(path_graph(4), [0]).is_dominating


def test_gamma_star():
    res = gamma(star_graph(5))
    assert res.gamma == 1 and res.witness.vertices == (0,)


def test_gamma_h(h_gadget, h):
    assert gamma(h).gamma == 3
    assert gamma_number(delete_vertices(h, h_ids(h_gadget, 1, 3))) == 3


def test_gamma_c6():
    assert gamma(cycle_graph(6)).gamma == 2 == brute_gamma(cycle_graph(6))


def test_gamma_empty_graph_rejected():
    with pytest.raises(GraphError):
        gamma(Graph.empty(0))


def test_gamma_budget():
    g = random_connected_graph(40, 0.05, random.Random(1))
    with pytest.raises(WorkBudgetExceeded):
        gamma(g, budget=5)
    assert gamma(g, budget=10**7).gamma == gamma_number(g)


def test_gamma_deterministic():
    g = cycle_graph(9)
    assert gamma(g) == gamma(Graph.from_edges(9, [tuple(e) for e in g.edges()]))


def test_gamma_bounded_examples(h):
    assert gamma_bounded(star_graph(5), 1).gamma == 1
    assert gamma_bounded(h, 2) == Exceeds(2)
    assert gamma_bounded(h, 3).gamma == 3
    with pytest.raises(ValueError):
        gamma_bounded(h, 0)


def test_gamma_matches_bounded_exhaustive():
    for g in all_connected_up_to(8):
        assert gamma_number(g) == gamma_bounded(g, g.n).gamma


def test_gamma_matches_bounded_random():
    rng = random.Random(11)
    for _ in range(200):
        g = random_connected_graph(rng.randint(2, 16), rng.uniform(0.05, 0.4), rng)
        assert gamma_number(g) == gamma_bounded(g, g.n).gamma


@given(graphs(max_n=12))
@settings(max_examples=100, deadline=None)
def test_gamma_witness_recertifies(g):
    res = gamma(g)
    cert = recheck(g, res.witness)
    assert cert.is_dominating and cert.size == res.gamma


def test_enumerate_h(h_gadget, h):
    sets = list(enumerate_minimum_dominating_sets(h))
    assert [s.vertices for s in sets] == [tuple(h_ids(h_gadget, 3, 4, 11))]


def test_enumerate_c4_all_pairs():
    sets = [s.vertices for s in enumerate_minimum_dominating_sets(cycle_graph(4))]
    assert sets == list(all_dominating_sets_of_size(cycle_graph(4), 2))
    assert len(sets) == 6


def test_enumerate_k3():
    assert [s.vertices for s in enumerate_minimum_dominating_sets(complete_graph(3))] == [
        (0,), (1,), (2,)]


def test_enumerate_matches_subset_scan():
    for g in all_connected_up_to(7):
        got = [s.vertices for s in enumerate_minimum_dominating_sets(g)]
        assert got == list(all_dominating_sets_of_size(g, gamma_number(g)))


def test_find_nonstable_examples(h):
    assert find_nonstable_mds(path_graph(4)).vertices == (1, 2)
    assert find_nonstable_mds(h) is None
    assert find_nonstable_mds(complete_graph(3)) is None


def test_find_nonstable_matches_enumeration():
    for g in all_connected_up_to(8):
        found = find_nonstable_mds(g)
        any_edge = any(not s.is_stable for s in enumerate_minimum_dominating_sets(g))
        assert (found is not None) == any_edge
        if found is not None:
            cert = recheck(g, found)
            assert cert.is_dominating and cert.size == gamma_number(g) and not cert.is_stable


def test_gamma_plus_one_h(h_gadget, h):
    paper_set = DominationCertificate.of(h, h_ids(h_gadget, 1, 2, 8, 9))
    assert paper_set.is_dominating and paper_set.induced_edge_count >= 2
    found = find_gamma_plus_one_with_two_edges(h)
    cert = recheck(h, found)
    assert cert.is_dominating and cert.size == 4 and cert.induced_edge_count >= 2


def _brute_two_edges(g):
    return any(induced_edge_count(g, mask_of(s)) >= 2
               for s in all_dominating_sets_of_size(g, gamma_number(g) + 1))


@pytest.mark.parametrize("g", [star_graph(3), cycle_graph(6)], ids=["K13", "C6"])
def test_gamma_plus_one_small_cases(g):
    # K1,3: a 2-set spans at most one edge; C6: three consecutive vertices
    # leave the opposite vertex undominated
    assert find_gamma_plus_one_with_two_edges(g) is None
    assert not _brute_two_edges(g)


def test_gamma_plus_one_matches_brute_force():
    for g in all_connected_up_to(7):
        found = find_gamma_plus_one_with_two_edges(g)
        assert (found is not None) == _brute_two_edges(g)
        if found is not None:
            cert = recheck(g, found)
            assert cert.is_dominating and cert.size == gamma_number(g) + 1
            assert cert.induced_edge_count >= 2


def test_gamma_monotone_under_contraction():
    for g in all_connected_up_to(8):
        gv = gamma_number(g)
        for e in g.edges():
            h, _ = contract_edge(g, e)
            assert gamma_number(h) in (gv - 1, gv)
