"""Exact domination number, minimum dominating set enumeration and the two
existence queries behind the contraction-number characterization."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .graph import Graph, GraphError, bits, induced_edge_count, mask_of


class WorkBudgetExceeded(RuntimeError):
    """An exponential search ran past its node budget."""


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class DominationCertificate:
    vertices: tuple[int, ...]
    size: int
    is_dominating: bool
    is_stable: bool
    induced_edge_count: int

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> "DominationCertificate":
        """Certify a vertex set from scratch against ``g``."""
        vs = tuple(sorted(set(vertices)))
        for v in vs:
            g._check_vertex(v)
        s = mask_of(vs)
        edges = induced_edge_count(g, s)
        return cls(vs, len(vs), dominated_mask(g, s) == g.full_mask, edges == 0, edges)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __str__(self) -> str:
        return f"size {self.size}: " + " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    witness: DominationCertificate


@dataclass(frozen=True)
class Exceeds:
    """Returned by :func:`gamma_bounded` when no dominating set of size <= q exists."""

    q: int


def dominated_mask(g: Graph, s: int) -> int:
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    return dominated_mask(g, mask_of(vertices)) == g.full_mask


class _Brancher:
    """Branch on the undominated vertex with the fewest admissible dominators.

    Sibling branches exclude the candidates already tried, so every vertex
    set is reached along exactly one path.
    """

    def __init__(self, g: Graph, budget: int | None = None):
        self.g = g
        self.closed = [g.adj[v] | (1 << v) for v in range(g.n)]
        self.two_hop = []
        for v in range(g.n):
            m = 0
            for w in bits(self.closed[v]):
                m |= self.closed[w]
            self.two_hop.append(m)
        self.budget = budget
        self.nodes = 0

    def lower_bound(self, undominated: int) -> int:
        # undominated vertices with pairwise disjoint closed neighbourhoods
        # need distinct dominators
        lb = 0
        blocked = 0
        rest = undominated
        while rest:
            low = rest & -rest
            rest ^= low
            if blocked & low:
                continue
            lb += 1
            blocked |= self.two_hop[low.bit_length() - 1]
        return lb

    def greedy(self) -> int:
        closed = self.closed
        undominated = self.g.full_mask
        chosen = 0
        while undominated:
            best = max(range(self.g.n), key=lambda w: ((closed[w] & undominated).bit_count(), -w))
            chosen |= 1 << best
            undominated &= ~closed[best]
        return chosen

    def search(self, chosen: int, size: int, undominated: int, excluded: int,
               bound: int, visit: Callable[[int, int], int], optimize: bool) -> int:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise WorkBudgetExceeded(f"search exceeded {self.budget} nodes")
        if not undominated:
            return visit(chosen, size)
        if size + self.lower_bound(undominated) > bound:
            return bound
        closed = self.closed
        allowed = ~excluded
        pick = 0
        pick_count = 1 << 30
        rest = undominated
        while rest:
            low = rest & -rest
            rest ^= low
            c = closed[low.bit_length() - 1] & allowed
            if not c:
                return bound
            k = c.bit_count()
            if k < pick_count:
                pick, pick_count = c, k
                if k == 1:
                    break
        cover = {w: closed[w] & undominated for w in bits(pick)}
        cands = sorted(cover, key=lambda w: (-cover[w].bit_count(), w))
        if optimize and len(cands) > 1:
            kept = []
            for i, w in enumerate(cands):
                cw = cover[w]
                if any(cw & ~cover[x] == 0 and (cover[x] != cw or j < i)
                       for j, x in enumerate(cands) if x != w):
                    continue
                kept.append(w)
            cands = kept
        for w in cands:
            if size + 1 > bound:
                break
            bound = self.search(chosen | (1 << w), size + 1, undominated & ~closed[w],
                                excluded, bound, visit, optimize)
            excluded |= 1 << w
        return bound


def _require_nonempty(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("domination number of the empty graph is undefined")


def _solve_gamma(g: Graph, budget: int | None) -> tuple[int, int]:
    br = _Brancher(g, budget)
    best = br.greedy()
    state = [best.bit_count(), best]

    def visit(chosen: int, size: int) -> int:
        state[0], state[1] = size, chosen
        return size - 1

    br.search(0, 0, g.full_mask, 0, state[0] - 1, visit, optimize=True)
    return state[0], state[1]


@lru_cache(maxsize=1 << 17)
def _gamma_key(n: int, adj: tuple[int, ...]) -> tuple[int, int]:
    return _solve_gamma(Graph._trusted(n, adj), None)


def gamma(g: Graph, budget: int | None = None) -> GammaResult:
    """Exact domination number with a minimum dominating set as witness.

    ``budget`` caps the number of search nodes (uncached when given).
    """
    _require_nonempty(g)
    if budget is None:
        size, chosen = _gamma_key(g.n, g.adj)
    else:
        size, chosen = _solve_gamma(g, budget)
    return GammaResult(size, DominationCertificate.of(g, bits(chosen)))


def gamma_number(g: Graph) -> int:
    _require_nonempty(g)
    return _gamma_key(g.n, g.adj)[0]


def gamma_bounded(g: Graph, q: int) -> GammaResult | Exceeds:
    """Domination number by trying every vertex subset of size at most ``q``."""
    if q < 1:
        raise ValueError("q must be at least 1")
    _require_nonempty(g)
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = g.full_mask
    for k in range(1, min(q, g.n) + 1):
        for combo in itertools.combinations(range(g.n), k):
            m = 0
            for v in combo:
                m |= closed[v]
            if m == full:
                return GammaResult(k, DominationCertificate.of(g, combo))
    return Exceeds(q)


def _enumerate_masks(g: Graph, size_limit: int, visit: Callable[[int, int], None],
                     budget: int | None = None) -> None:
    br = _Brancher(g, budget)

    def wrapped(chosen: int, size: int) -> int:
        visit(chosen, size)
        return size_limit

    try:
        br.search(0, 0, g.full_mask, 0, size_limit, wrapped, optimize=False)
    except _Stop:
        pass


def enumerate_minimum_dominating_sets(g: Graph, budget: int | None = None
                                      ) -> Iterator[DominationCertificate]:
    """Every minimum dominating set exactly once, in lexicographic order."""
    target = gamma(g, budget).gamma
    seen: set[int] = set()

    def visit(chosen: int, size: int) -> None:
        if size == target:
            seen.add(chosen)

    _enumerate_masks(g, target, visit, budget)
    for key in sorted(tuple(bits(m)) for m in seen):
        yield DominationCertificate.of(g, key)


def _extend_to_size(br: _Brancher, forced: int, limit: int) -> int | None:
    """A dominating set of size <= ``limit`` containing ``forced``, or None."""
    if forced.bit_count() > limit:
        return None
    g = br.g
    undominated = g.full_mask & ~dominated_mask(g, forced)
    found: list[int] = []

    def visit(chosen: int, size: int) -> int:
        found.append(chosen)
        raise _Stop

    try:
        br.search(forced, forced.bit_count(), undominated, 0, limit, visit, optimize=True)
    except _Stop:
        return found[0]
    return None


def find_nonstable_mds(g: Graph, budget: int | None = None) -> DominationCertificate | None:
    """A minimum dominating set inducing at least one edge, if any exists.

    One pruned search per edge ``uv`` for a dominating set of size gamma
    through both endpoints; swapping a branch vertex for one covering more
    keeps ``u`` and ``v`` in the set, so dominance pruning stays sound.
    """
    target = gamma(g, budget).gamma
    br = _Brancher(g, budget)
    for u, v in g.edges():
        found = _extend_to_size(br, (1 << u) | (1 << v), target)
        if found is not None:
            return DominationCertificate.of(g, bits(found))
    return None


def find_gamma_plus_one_with_two_edges(g: Graph, budget: int | None = None
                                       ) -> DominationCertificate | None:
    """A dominating set of size gamma+1 whose induced subgraph has >= 2 edges."""
    target = gamma(g, budget).gamma + 1
    if target > g.n:
        return None
    found: list[int] = []

    def visit(chosen: int, size: int) -> None:
        # the branching yields sets that are dominating on arrival; a set of
        # size gamma+1 either arrives whole or as an MDS plus one extra vertex
        edges = induced_edge_count(g, chosen)
        if size == target:
            if edges >= 2:
                found.append(chosen)
                raise _Stop
            return
        for w in range(g.n):
            if not chosen >> w & 1 and edges + (g.adj[w] & chosen).bit_count() >= 2:
                found.append(chosen | (1 << w))
                raise _Stop

    _enumerate_masks(g, target, visit, budget)
    return DominationCertificate.of(g, bits(found[0])) if found else None


def all_dominating_sets_of_size(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Plain subset scan; the independent oracle used by the test-suite."""
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    for combo in itertools.combinations(range(g.n), k):
        m = 0
        for v in combo:
            m |= closed[v]
        if m == g.full_mask:
            yield combo
