"""Polynomial-time k-Edge-Contraction(gamma) for P5-free graphs, k = 1, 2.

Only dominating sets of size at most three are ever inspected: graphs with
gamma >= 3 in this class always admit a non-stable minimum dominating set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .domination import DominationCertificate, gamma
from .graph import Graph, bits, distance, induced_edge_count, require_connected
from .recognition import is_pt_free

DOMINATING_VERTEX = "dominating-vertex"
DOMINATING_EDGE = "dominating-edge"
NONADJACENT_PAIR = "nonadjacent-dominating-pair"
TRIPLE_TWO_EDGES = "dominating-triple-two-edges"
LARGE_GAMMA = "no-dominating-set-of-size-two"


@dataclass(frozen=True)
class P5Answer:
    answer: bool
    step: str
    witness: tuple[int, ...] = ()
    warning: str | None = None

    def __bool__(self) -> bool:
        return self.answer


def solve_p5_free(g: Graph, k: int, validate: bool = False,
                  construct_witness: bool = False) -> P5Answer:
    """Decide k-Edge-Contraction(gamma) on a connected P5-free graph.

    The input is trusted to be P5-free; with ``validate`` an induced P5 is
    searched for and reported in ``warning`` (the answer then carries no
    guarantee). ``construct_witness`` builds a non-stable minimum dominating
    set in the gamma >= 3 case, which costs an exact gamma computation.
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    require_connected(g)
    warning = None
    if validate:
        check = is_pt_free(g, 5)
        if not check.free:
            warning = f"input has an induced P5: {' '.join(map(str, check.path))}"

    full = g.full_mask
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    for v in range(g.n):
        if closed[v] == full:
            return P5Answer(False, DOMINATING_VERTEX, (v,), warning)
    for u, v in g.edges():
        if closed[u] | closed[v] == full:
            return P5Answer(True, DOMINATING_EDGE, (u, v), warning)
    pair = next(((u, v) for u, v in itertools.combinations(range(g.n), 2)
                 if closed[u] | closed[v] == full), None)
    if pair is not None:
        if k == 1:
            return P5Answer(False, NONADJACENT_PAIR, pair, warning)
        for triple in itertools.combinations(range(g.n), 3):
            a, b, c = triple
            if closed[a] | closed[b] | closed[c] == full and \
                    induced_edge_count(g, (1 << a) | (1 << b) | (1 << c)) >= 2:
                return P5Answer(True, TRIPLE_TWO_EDGES, triple, warning)
        return P5Answer(False, NONADJACENT_PAIR, pair, warning)
    witness: tuple[int, ...] = ()
    if construct_witness:
        found = nonstable_mds_by_exchange(g, gamma(g).witness.vertices)
        if found is None:
            warning = warning or "exchange argument failed; input is not P5-free"
        else:
            witness = found
    return P5Answer(True, LARGE_GAMMA, witness, warning)


def nonstable_mds_by_exchange(g: Graph, mds: tuple[int, ...]) -> tuple[int, ...] | None:
    """Turn a minimum dominating set of a P5-free graph with gamma >= 3 into
    one that induces an edge, using single or double vertex swaps around a
    farthest pair of members. Returns ``None`` if no swap works."""
    d = set(mds)
    if induced_edge_count(g, sum(1 << v for v in d)) >= 1:
        return tuple(sorted(d))

    def ok(cand: set[int]) -> bool:
        cert = DominationCertificate.of(g, cand)
        return cert.is_dominating and cert.size == len(d) and not cert.is_stable

    members = sorted(d)
    far = max(itertools.combinations(members, 2), key=lambda p: (distance(g, *p), -p[0], -p[1]))
    u, v = far
    duv = distance(g, u, v)
    if duv == 3:
        for x in bits(g.adj[u]):
            for y in bits(g.adj[v] & g.adj[x]):
                cand = (d - {u, v}) | {x, y}
                if ok(cand):
                    return tuple(sorted(cand))
        return None
    for w in members:
        if w in (u, v):
            continue
        for x in bits(g.adj[u] & g.adj[w]):
            for y in bits(g.adj[v] & g.adj[w]):
                options = [(d - {u, v}) | {x, y}] if x != y else []
                options += [(d - {z}) | {x} for z in (w, u, v)]
                options += [(d - {z}) | {y} for z in (w, u, v)]
                for cand in options:
                    if ok(cand):
                        return tuple(sorted(cand))
    return None
