import pytest

from domcontract.contraction import decide_kec
from domcontract.domination import DominationCertificate, gamma, gamma_number
from domcontract.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from domcontract.p5free import (
    DOMINATING_EDGE,
    DOMINATING_VERTEX,
    LARGE_GAMMA,
    NONADJACENT_PAIR,
    nonstable_mds_by_exchange,
    solve_p5_free,
)
from domcontract.verify import p5_free_graphs


def test_steps():
    assert solve_p5_free(star_graph(4), 1).step == DOMINATING_VERTEX
    assert not solve_p5_free(star_graph(4), 2)
    res = solve_p5_free(path_graph(4), 1)
    assert res and res.step == DOMINATING_EDGE and res.witness == (1, 2)
    res = solve_p5_free(cycle_graph(4), 1)
    assert res and res.step == DOMINATING_EDGE
    res = solve_p5_free(cycle_graph(5), 1)
    assert not res and res.step == NONADJACENT_PAIR
    assert solve_p5_free(cycle_graph(5), 2)


def test_bad_k():
    with pytest.raises(ValueError):
        solve_p5_free(path_graph(3), 3)


def test_validate_warns_on_p5():
    res = solve_p5_free(path_graph(6), 1, validate=True)
    assert res.warning is not None and "P5" in res.warning
    assert solve_p5_free(cycle_graph(5), 1, validate=True).warning is None


def test_large_gamma_witness():
    # a P5-free graph with gamma = 3: three disjoint triangles joined through a
    # central triangle, each outer triangle hanging off one central vertex
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for c in range(3):
        a, b = nxt, nxt + 1
        nxt += 2
        edges += [(c, a), (c, b), (a, b)]
    g = Graph.from_edges(nxt, edges)
    if gamma_number(g) < 3:
        pytest.skip("construction has gamma < 3")
    res = solve_p5_free(g, 2, construct_witness=True)
    assert res and res.step == LARGE_GAMMA


def test_exchange_on_enumerated_graphs():
    for n in range(2, 9):
        for g in p5_free_graphs(n):
            if gamma_number(g) < 3:
                continue
            mds = gamma(g).witness.vertices
            found = nonstable_mds_by_exchange(g, mds)
            assert found is not None
            cert = DominationCertificate.of(g, found)
            assert cert.is_dominating and cert.size == len(mds) and not cert.is_stable


def test_agrees_with_characterization_up_to_8():
    for n in range(2, 9):
        for g in p5_free_graphs(n):
            for k in (1, 2):
                assert bool(solve_p5_free(g, k)) == bool(decide_kec(g, k))
