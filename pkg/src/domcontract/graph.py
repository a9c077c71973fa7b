"""Simple undirected graphs on vertex ids ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
unions and domination checks are single integer operations. Graph values
are immutable; every transformation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    pass


class InvalidEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Edge(NamedTuple):
    """An undirected edge, normalized so that ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise InvalidEdgeError(f"self-loop on vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from vertex count")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length differs from vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop on vertex {v}")
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidEdgeError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise InvalidEdgeError(f"self-loop on vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...],
                 labels: tuple[str, ...] | None = None) -> "Graph":
        # skips validation; for internal transformations that preserve simplicity
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "labels", labels)
        return g

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def closed_mask(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def neighborhood(self, u: int, closed: bool = False) -> frozenset[int]:
        self._check_vertex(u)
        row = self.closed_mask(u) if closed else self.adj[u]
        return frozenset(bits(row))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        """Vertex id carrying ``label``."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def _check_edge(self, e: Sequence[int]) -> Edge:
        u, v = e
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v or not self.adj[u] >> v & 1:
            raise InvalidEdgeError(f"({u}, {v}) is not an edge")
        return Edge.of(u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"


def _drop_bit(mask: int, v: int) -> int:
    """Remove bit ``v`` from ``mask``, shifting higher bits down by one."""
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def contract_edge(g: Graph, e: Sequence[int]) -> tuple[Graph, list[int]]:
    """Contract edge ``e`` and return the new graph with an old->new id map.

    The merged vertex keeps the smaller endpoint id; ids above the larger
    endpoint shift down by one.
    """
    u, v = g._check_edge(e)
    rows = []
    for w in range(g.n):
        if w == v:
            continue
        row = g.adj[w]
        if w == u:
            row = (row | g.adj[v]) & ~((1 << u) | (1 << v))
        elif row >> v & 1:
            row = (row & ~(1 << v)) | (1 << u)
        rows.append(_drop_bit(row, v))
    mapping = [i if i < v else i - 1 for i in range(g.n)]
    mapping[v] = u
    labels = None
    if g.labels is not None:
        labels = list(g.labels)
        labels[u] = f"{g.labels[u]}+{g.labels[v]}"
        del labels[v]
    return Graph._trusted(g.n - 1, tuple(rows), tuple(labels) if labels is not None else None), mapping


def contract_sequence(g: Graph, steps: Iterable[Sequence[int]]) -> tuple[Graph, list[int]]:
    """Contract edges one after another; each step is given in the ids of the
    graph current at that step. Returns the final graph and the composed map."""
    mapping = list(range(g.n))
    for e in steps:
        g, step_map = contract_edge(g, e)
        mapping = [step_map[i] for i in mapping]
    return g, mapping


def _default_labels(g: Graph) -> list[str]:
    return list(g.labels) if g.labels is not None else [str(i) for i in range(g.n)]


def subdivide_edge(g: Graph, e: Sequence[int], k: int) -> Graph:
    """Replace edge ``uv`` by a path ``u - e1 - ... - ek - v``.

    Original ids are kept; the new vertices get ids ``n..n+k-1`` in path
    order, so ``e1`` is adjacent to ``e[0]`` and ``ek`` to ``e[1]``.
    """
    if k < 1:
        raise GraphError("k must be positive")
    u, v = e
    g._check_edge((u, v))
    edges = [tuple(x) for x in g.edges() if set(x) != {u, v}]
    path = [u] + list(range(g.n, g.n + k)) + [v]
    edges.extend(zip(path, path[1:]))
    labels = _default_labels(g)
    a, b = labels[u], labels[v]
    labels.extend(f"e{i}[{a},{b}]" for i in range(1, k + 1))
    return Graph.from_edges(g.n + k, edges, labels)


def subdivide_all_edges_3(g: Graph) -> Graph:
    """3-subdivide every edge. Original vertices keep ids ``0..n-1``; the
    subdivision vertices of the i-th edge (in ``g.edges()`` order) are
    ``n+3i, n+3i+1, n+3i+2`` with the first adjacent to the lower endpoint."""
    labels = _default_labels(g)
    edges = []
    nxt = g.n
    for u, v in g.edges():
        a, b, c = nxt, nxt + 1, nxt + 2
        edges.extend([(u, a), (a, b), (b, c), (c, v)])
        labels.extend(f"e{i}[{labels[u]},{labels[v]}]" for i in (1, 2, 3))
        nxt += 3
    return Graph.from_edges(nxt, edges, labels)


def distance(g: Graph, u: int, v: int) -> int | None:
    """BFS distance, or ``None`` when ``v`` is unreachable from ``u``."""
    g._check_vertex(u)
    g._check_vertex(v)
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        if frontier >> v & 1:
            return d
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return None


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for x in bits(g.adj[w]):
            if dist[x] is None:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    parent = {u: u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return path[::-1]
        for x in bits(g.adj[w]):
            if x not in parent:
                parent[x] = w
                queue.append(x)
    return None


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("twin test needs two distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    return g.closed_mask(u) == g.closed_mask(v)


def are_false_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("twin test needs two distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    return g.adj[u] == g.adj[v]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``; vertices are renumbered in increasing order.
    Returns the graph and the old->new id map of the kept vertices."""
    keep = sorted(set(s))
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    keep_mask = mask_of(keep)
    rows = []
    for v in keep:
        rows.append(mask_of(index[w] for w in bits(g.adj[v] & keep_mask)))
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(rows), labels), index


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    drop = set(s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))[0]


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Bitmask of the component of ``start`` inside the vertex mask ``within``."""
    within = g.full_mask if within is None else within
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_mask(g, 0) == g.full_mask


def require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError("graph must be nonempty and connected")


def induced_edge_count(g: Graph, s: int) -> int:
    """Number of edges of ``g`` with both ends in the vertex mask ``s``."""
    total = 0
    for v in bits(s):
        total += (g.adj[v] & s).bit_count()
    return total // 2


def relabel(g: Graph, labels: Sequence[str] | None) -> Graph:
    return Graph(g.n, g.adj, tuple(labels) if labels is not None else None)


# -- named small graphs -----------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format (``#`` comments)."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListParseError(lineno, "negative count in header")
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListParseError(lineno, f"vertex id out of range 0..{n - 1}")
        if a == b:
            raise EdgeListParseError(lineno, f"self-loop on vertex {a}")
        e = Edge.of(a, b)
        if e in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {a} {b}")
        seen.add(e)
        edges.append((a, b))
    if header is None:
        raise EdgeListParseError(0, "missing 'n m' header")
    if len(edges) != header[1]:
        raise EdgeListParseError(0, f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_labels(g: Graph) -> str:
    return "".join(f"{v} {g.label(v)}\n" for v in range(g.n))


def parse_labels(text: str, n: int) -> tuple[str, ...]:
    labels: list[str | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        vid, _, label = line.partition(" ")
        try:
            v = int(vid)
        except ValueError:
            raise EdgeListParseError(lineno, f"bad vertex id {vid!r}") from None
        if not 0 <= v < n:
            raise EdgeListParseError(lineno, f"vertex id out of range 0..{n - 1}")
        labels[v] = label.strip()
    if any(lab is None for lab in labels):
        raise EdgeListParseError(0, "label file does not cover every vertex")
    return tuple(labels)  # type: ignore[arg-type]
