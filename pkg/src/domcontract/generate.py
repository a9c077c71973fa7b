"""Graph generators: exhaustive canonical enumeration and seeded random families."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterator

import pynauty

from .graph import Graph, bits


def certificate(g: Graph) -> bytes:
    """Canonical isomorphism certificate (nauty)."""
    adjacency = {v: list(bits(g.adj[v] >> (v + 1) << (v + 1))) for v in range(g.n)}
    return pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adjacency))


def canonical_key(g: Graph) -> tuple[int, bytes]:
    return g.n, certificate(g) if g.n else b""


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_key(g) == canonical_key(h)


def _extend(parents: list[tuple[int, ...]], n: int,
            keep: Callable[[Graph, int], bool] | None) -> list[tuple[int, ...]]:
    # every connected graph has a non-cut vertex, so adding a vertex with a
    # nonempty neighbourhood to all connected (n-1)-vertex graphs reaches all
    seen: set[bytes] = set()
    out = []
    new_bit = 1 << (n - 1)
    for rows in parents:
        for nb in range(1, 1 << (n - 1)):
            adj = tuple(r | new_bit if nb >> i & 1 else r for i, r in enumerate(rows)) + (nb,)
            g = Graph._trusted(n, adj)
            cert = certificate(g)
            if cert in seen:
                continue
            seen.add(cert)
            if keep is None or keep(g, n - 1):
                out.append(adj)
    return out


@lru_cache(maxsize=None)
def _connected_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    return tuple(_extend(list(_connected_rows(n - 1)), n, None))


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices, one per isomorphism class."""
    if n < 1:
        return []
    return [Graph._trusted(n, rows) for rows in _connected_rows(n)]


def connected_graphs_hereditary(n: int, keep: Callable[[Graph, int], bool]) -> list[Graph]:
    """Connected graphs on ``n`` vertices with a hereditary property, grown
    level by level.

    ``keep(g, v)`` is only asked about graphs whose ``g - v`` already has the
    property, so it may restrict its check to structures through ``v``.
    """
    level = [(0,)] if keep(Graph._trusted(1, (0,)), 0) else []
    for size in range(2, n + 1):
        level = _extend(level, size, keep)
    return [Graph._trusted(n, rows) for rows in level]


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """A random spanning tree plus each remaining pair as an edge with
    probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.add((a, b))
    return Graph.from_edges(n, sorted(edges))


def random_split_graph(n: int, rng: random.Random, clique_size: int | None = None,
                       p: float = 0.5) -> Graph:
    """Connected split graph: a clique plus an independent set whose vertices
    each see a random nonempty subset of the clique."""
    if clique_size is None:
        clique_size = rng.randint(1, n)
    clique = list(range(clique_size))
    edges = [(a, b) for a in clique for b in clique if a < b]
    for v in range(clique_size, n):
        nbrs = [c for c in clique if rng.random() < p] or [rng.choice(clique)]
        edges.extend((c, v) for c in nbrs)
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def all_connected_up_to(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)

