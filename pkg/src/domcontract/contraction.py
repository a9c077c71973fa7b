"""Contraction number ct_gamma(G) and the k-Edge-Contraction(gamma) decision.

The characterization route decides ct_gamma = 1 and ct_gamma = 2 from the
structure of minimum (and gamma+1) dominating sets; :func:`ct_bruteforce`
recomputes gamma after every contraction sequence and serves as the
independent oracle for it.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .domination import (
    DominationCertificate,
    Exceeds,
    WorkBudgetExceeded,
    find_gamma_plus_one_with_two_edges,
    find_nonstable_mds,
    gamma,
    gamma_bounded,
    gamma_number,
)
from .generate import certificate
from .graph import (
    Edge,
    Graph,
    contract_edge,
    contract_sequence,
    induced_edge_count,
    require_connected,
    shortest_path,
)

log = logging.getLogger(__name__)

NONSTABLE_MDS = "nonstable-mds"
TWO_EDGE_SET = "gamma-plus-one-two-edges"
PATH_BOUND = "path-between-mds-members"
GAMMA_ONE = "dominating-vertex"


@dataclass(frozen=True)
class ContractionNumber:
    """ct_gamma(G). ``value`` is ``None`` when gamma(G) = 1 (no contraction
    sequence can lower it). ``witness`` lists the contracted edges, each in
    the ids of the graph current at its step."""

    value: int | None
    gamma: int
    witness: tuple[Edge, ...] = ()
    basis: str = GAMMA_ONE
    certificate: DominationCertificate | None = None

    @property
    def undefined(self) -> bool:
        return self.value is None

    def at_most(self, k: int) -> bool:
        return self.value is not None and self.value <= k


@dataclass(frozen=True)
class KecAnswer:
    answer: bool
    witness: tuple[Edge, ...] = ()

    def __bool__(self) -> bool:
        return self.answer


@dataclass(frozen=True)
class BruteForceResult:
    k: int
    witness: tuple[Edge, ...]
    explored: int = field(default=0, compare=False)


def induced_edges(g: Graph, vertices: Sequence[int]) -> list[Edge]:
    vs = sorted(vertices)
    return [Edge(a, b) for a, b in itertools.combinations(vs, 2) if g.adj[a] >> b & 1]


def chain_edges(g: Graph, edges: Sequence[Sequence[int]]) -> tuple[Edge, ...]:
    """Re-express a list of original-graph edges as a replayable sequence:
    each edge is mapped through the id maps of the contractions before it."""
    steps = []
    mapping = list(range(g.n))
    current = g
    for a, b in edges:
        e = Edge.of(mapping[a], mapping[b])
        steps.append(e)
        current, step_map = contract_edge(current, e)
        mapping = [step_map[i] for i in mapping]
    return tuple(steps)


def replay_decreases(g: Graph, steps: Sequence[Sequence[int]], gamma_value: int | None = None) -> bool:
    """Whether contracting ``steps`` in order lowers gamma by at least one."""
    if gamma_value is None:
        gamma_value = gamma_number(g)
    h, _ = contract_sequence(g, steps)
    return gamma_number(h) <= gamma_value - 1


def _path_witness(g: Graph, mds: DominationCertificate) -> tuple[Edge, ...]:
    # in a connected graph two members of any minimum dominating set lie
    # within distance 3; contracting a shortest path between them merges
    # both into one vertex dominating everything they dominated
    best: list[int] | None = None
    for u, v in itertools.combinations(mds.vertices, 2):
        p = shortest_path(g, u, v)
        if p is not None and (best is None or len(p) < len(best)):
            best = p
    assert best is not None and len(best) <= 4
    return chain_edges(g, list(zip(best, best[1:])))


def contraction_number(g: Graph, verify: bool = True, budget: int | None = None
                       ) -> ContractionNumber:
    """ct_gamma(g) via the minimum-dominating-set characterization.

    ``verify`` replays the witness and checks that gamma drops.
    """
    require_connected(g)
    base = gamma(g, budget)
    gv = base.gamma
    if gv == 1:
        return ContractionNumber(None, 1, (), GAMMA_ONE, base.witness)
    nonstable = find_nonstable_mds(g, budget)
    if nonstable is not None:
        e = induced_edges(g, nonstable.vertices)[0]
        result = ContractionNumber(1, gv, (e,), NONSTABLE_MDS, nonstable)
    else:
        two = find_gamma_plus_one_with_two_edges(g, budget)
        if two is not None:
            e, f = induced_edges(g, two.vertices)[:2]
            result = ContractionNumber(2, gv, chain_edges(g, [e, f]), TWO_EDGE_SET, two)
        else:
            result = ContractionNumber(3, gv, _path_witness(g, base.witness), PATH_BOUND,
                                       base.witness)
    if verify and not replay_decreases(g, result.witness, gv):
        raise AssertionError(f"witness {result.witness} does not lower gamma")
    return result


def decide_kec(g: Graph, k: int, budget: int | None = None) -> KecAnswer:
    """Can at most ``k`` contractions lower gamma(g) by one?"""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    require_connected(g)
    if gamma(g, budget).gamma == 1:
        return KecAnswer(False)
    if k == 1:
        nonstable = find_nonstable_mds(g, budget)
        if nonstable is None:
            return KecAnswer(False)
        return KecAnswer(True, (induced_edges(g, nonstable.vertices)[0],))
    ct = contraction_number(g, verify=False, budget=budget)
    return KecAnswer(ct.at_most(k), ct.witness if ct.at_most(k) else ())


def edge_contraction_decreases_gamma(g: Graph, e: Sequence[int]) -> bool:
    """Is gamma(g / e) <= gamma(g) - 1?"""
    h, _ = contract_edge(g, e)
    return gamma_number(h) <= gamma_number(g) - 1


def ct_bruteforce(g: Graph, kmax: int = 3, budget: int | None = None) -> BruteForceResult | None:
    """Smallest k <= kmax such that some length-k contraction sequence lowers
    gamma, found by exhaustive search; ``None`` if there is none.

    States reached twice up to isomorphism are expanded once.
    """
    if not 1 <= kmax <= 3:
        raise ValueError("kmax must be between 1 and 3")
    require_connected(g)
    target = gamma_number(g) - 1
    if target < 1:
        return None
    frontier: list[tuple[Graph, tuple[Edge, ...]]] = [(g, ())]
    explored = 0
    for k in range(1, kmax + 1):
        seen: set[tuple[int, bytes]] = set()
        nxt = []
        for state, steps in frontier:
            for e in state.edges():
                explored += 1
                if budget is not None and explored > budget:
                    raise WorkBudgetExceeded(f"brute force exceeded {budget} contractions")
                h, _ = contract_edge(state, e)
                key = (h.n, certificate(h))
                if key in seen:
                    continue
                seen.add(key)
                if gamma_number(h) <= target:
                    return BruteForceResult(k, steps + (e,), explored)
                nxt.append((h, steps + (e,)))
        frontier = nxt
    return None


def decide_kec_bounded_gamma(g: Graph, k: int, q: int) -> bool:
    """k-Edge-Contraction(gamma) for k = 1, 2 on graphs with gamma <= q by
    scanning vertex subsets of size at most q + 1 (polynomial for fixed q).

    Raises ``ValueError`` if gamma(g) > q.
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    require_connected(g)
    res = gamma_bounded(g, q)
    if isinstance(res, Exceeds):
        raise ValueError(f"gamma exceeds {q}")
    gv = res.gamma
    if gv == 1:
        return False
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]

    def sets(size: int):
        for combo in itertools.combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= closed[v]
            if m == g.full_mask:
                yield sum(1 << v for v in combo)

    if any(induced_edge_count(g, s) >= 1 for s in sets(gv)):
        return True
    if k == 1:
        return False
    return any(induced_edge_count(g, s) >= 2 for s in sets(gv + 1))


def solve_domination_via_ec_oracle(
    g: Graph,
    ell: int,
    oracle: Callable[[Graph, Edge], bool] = edge_contraction_decreases_gamma,
    trace: list[tuple[Edge, bool, int]] | None = None,
) -> bool:
    """Decide gamma(g) <= ell using only a per-edge "does contracting this
    edge lower gamma" oracle, shrinking the instance by one vertex per call."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    require_connected(g)
    while g.n > 1:
        e = g.edges()[0]
        drops = oracle(g, e)
        g, _ = contract_edge(g, e)
        if drops:
            ell -= 1
        log.debug("contract %s: drops=%s -> n=%d ell=%d", tuple(e), drops, g.n, ell)
        if trace is not None:
            trace.append((e, drops, ell))
    return ell >= 1


def witness_original_vertices(g: Graph, steps: Sequence[Sequence[int]]) -> list[set[int]]:
    """For each step, the original vertex classes merged by that contraction."""
    classes = [{v} for v in range(g.n)]
    out = []
    current = g
    for e in steps:
        a, b = e
        merged = classes[a] | classes[b]
        out.append(merged)
        current, step_map = contract_edge(current, e)
        new_classes: list[set[int]] = [set() for _ in range(current.n)]
        for old, cls in enumerate(classes):
            new_classes[step_map[old]] |= cls
        classes = new_classes
    return out

