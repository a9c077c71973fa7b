"""Recognition of the hereditary classes used as hypotheses: P_t-free,
2K2-free, bipartite and large girth."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .domination import WorkBudgetExceeded
from .graph import Graph, bits

MAX_PATH_ORDER = 12
DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class PathFreeResult:
    free: bool
    path: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.free


@dataclass(frozen=True)
class ClassReport:
    bipartite: bool
    girth: float
    longest_induced_path_order: int
    is_2k2_free: bool


class _PathSearch:
    def __init__(self, g: Graph, budget: int | None):
        self.g = g
        self.closed = [g.adj[v] | (1 << v) for v in range(g.n)]
        self.budget = budget
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise WorkBudgetExceeded(f"induced path search exceeded {self.budget} steps")

    def extend(self, path: list[int], blocked: int, t: int) -> list[int] | None:
        # blocked: closed neighbourhoods of every path vertex except the last,
        # so a candidate next vertex keeps the path induced iff it avoids it
        self.tick()
        if len(path) == t:
            return path
        last = path[-1]
        for w in bits(self.g.adj[last] & ~blocked):
            found = self.extend(path + [w], blocked | self.closed[last], t)
            if found is not None:
                return found
        return None


def find_induced_path(g: Graph, t: int, budget: int | None = DEFAULT_BUDGET) -> list[int] | None:
    """An induced path on ``t`` vertices, or ``None``."""
    if t < 1:
        raise ValueError("t must be positive")
    if t > MAX_PATH_ORDER:
        raise ValueError(f"path order is capped at {MAX_PATH_ORDER}")
    search = _PathSearch(g, budget)
    for s in range(g.n):
        found = search.extend([s], 0, t)
        if found is not None:
            return found
    return None


def find_induced_path_through(g: Graph, t: int, v: int,
                              budget: int | None = DEFAULT_BUDGET) -> list[int] | None:
    """An induced path on ``t`` vertices that contains ``v``, or ``None``."""
    search = _PathSearch(g, budget)
    closed = search.closed

    def grow(path: list[int]) -> list[int] | None:
        search.tick()
        if len(path) == t:
            return path
        inner = 0
        for x in path[1:-1]:
            inner |= closed[x]
        head, tail = path[0], path[-1]
        right_block = inner | closed[head] if len(path) > 1 else 0
        for w in bits(g.adj[tail] & ~right_block & ~(1 << head)):
            found = grow(path + [w])
            if found is not None:
                return found
        left_block = inner | closed[tail] if len(path) > 1 else 0
        for w in bits(g.adj[head] & ~left_block & ~(1 << tail)):
            found = grow([w] + path)
            if found is not None:
                return found
        return None

    return grow([v])


def is_pt_free(g: Graph, t: int, budget: int | None = DEFAULT_BUDGET) -> PathFreeResult:
    """True iff ``g`` has no induced path on ``t`` vertices; otherwise the
    result carries one such path."""
    if t < 2:
        raise ValueError("t must be at least 2")
    path = find_induced_path(g, t, budget)
    return PathFreeResult(path is None, tuple(path) if path is not None else None)


def longest_induced_path_order(g: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    t = 1
    while t < min(g.n, MAX_PATH_ORDER) and find_induced_path(g, t + 1, budget) is not None:
        t += 1
    return t


def is_2k2_free(g: Graph) -> bool:
    """No two edges uv, xy such that no edge joins {u, v} and {x, y}."""
    edges = g.edges()
    for (u, v), (x, y) in itertools.combinations(edges, 2):
        if {u, v} & {x, y}:
            continue
        closed_xy = g.adj[x] | g.adj[y] | (1 << x) | (1 << y)
        if not (closed_xy >> u & 1 or closed_xy >> v & 1):
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    colour: list[int | None] = [None] * g.n
    for s in range(g.n):
        if colour[s] is not None:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if colour[w] is None:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests)."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_cl_free_up_to(g: Graph, l: int) -> bool:
    """{C_3, ..., C_l}-free; a shortest cycle is always induced, so this is
    girth(g) > l."""
    if l < 3:
        raise ValueError("l must be at least 3")
    return girth(g) > l


def class_report(g: Graph, budget: int | None = DEFAULT_BUDGET) -> ClassReport:
    return ClassReport(
        bipartite=is_bipartite(g),
        girth=girth(g),
        longest_induced_path_order=longest_induced_path_order(g, budget),
        is_2k2_free=is_2k2_free(g),
    )
