"""Tree decompositions and the O*(3^t) dominating-set dynamic program.

The DP tables count partial solutions by size. Each bag vertex carries one
of three states: in the set, dominated, or not yet dominated. Join nodes
switch "dominated" to "either" so that joining becomes a pointwise product
(plus a convolution over sizes), which keeps every node at O(3^t) entries.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .contraction import KecAnswer
from .domination import DominationCertificate, GammaResult
from .graph import Edge, Graph, GraphError, bits, contract_edge, require_connected

IN, DOM, UND = 0, 1, 2


class InvalidDecompositionError(GraphError):
    pass


class TdParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbours(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return nbrs


def validate_decomposition(g: Graph, td: TreeDecomposition) -> None:
    """Raise :class:`InvalidDecompositionError` naming the violated invariant."""
    nb = len(td.bags)
    if nb == 0:
        raise InvalidDecompositionError("tree: decomposition has no bags")
    for a, b in td.tree_edges:
        if not (0 <= a < nb and 0 <= b < nb) or a == b:
            raise InvalidDecompositionError(f"tree: bad tree edge ({a}, {b})")
    if len(set(map(frozenset, td.tree_edges))) != len(td.tree_edges) or len(td.tree_edges) != nb - 1:
        raise InvalidDecompositionError("tree: bag graph is not a tree")
    nbrs = td.neighbours()
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != nb:
        raise InvalidDecompositionError("tree: bag graph is not connected")
    for bag in td.bags:
        for v in bag:
            if not 0 <= v < g.n:
                raise InvalidDecompositionError(f"vertex coverage: bag holds unknown vertex {v}")
    holders: dict[int, list[int]] = defaultdict(list)
    for i, bag in enumerate(td.bags):
        for v in bag:
            holders[v].append(i)
    for v in range(g.n):
        if v not in holders:
            raise InvalidDecompositionError(f"vertex coverage: vertex {v} is in no bag")
    for u, v in g.edges():
        if not any(u in td.bags[i] for i in holders[v]):
            raise InvalidDecompositionError(f"edge coverage: edge {u}-{v} is in no bag")
    for v, idx in holders.items():
        allowed = set(idx)
        reach = {idx[0]}
        stack = [idx[0]]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in allowed and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if len(reach) != len(idx):
            raise InvalidDecompositionError(f"connectivity: bags holding vertex {v} are not connected")


def heuristic_tree_decomposition(g: Graph) -> TreeDecomposition:
    """Min-fill elimination ordering (ties: fewer neighbours, then lower id)."""
    if g.n == 0:
        raise GraphError("graph must be nonempty")
    adj = list(g.adj)
    alive = g.full_mask
    order = []
    bag_of = {}

    def fill(v: int) -> int:
        nb = adj[v]
        rest = nb
        missing = 0
        while rest:
            low = rest & -rest
            rest ^= low
            missing += (nb & ~adj[low.bit_length() - 1]).bit_count() - 1
        return missing // 2

    while alive:
        v = min(bits(alive), key=lambda x: (fill(x), adj[x].bit_count(), x))
        nb = adj[v]
        bag_of[v] = frozenset(bits(nb | (1 << v)))
        for w in bits(nb):
            adj[w] = (adj[w] | nb) & ~(1 << w) & ~(1 << v)
        alive &= ~(1 << v)
        order.append(v)
    position = {v: i for i, v in enumerate(order)}
    bags = [bag_of[v] for v in order]
    edges = []
    roots = []
    for i, v in enumerate(order):
        later = [w for w in bag_of[v] if w != v]
        if later:
            edges.append((i, min(position[w] for w in later)))
        else:
            roots.append(i)
    # one root per connected component; chain them
    edges.extend(zip(roots, roots[1:]))
    td = TreeDecomposition(tuple(bags), tuple(edges))
    validate_decomposition(g, td)
    return td


def path_decomposition_of_path(n: int) -> TreeDecomposition:
    """The width-1 decomposition of the path 0-1-...-(n-1)."""
    if n == 1:
        return TreeDecomposition((frozenset({0}),), ())
    bags = tuple(frozenset({i, i + 1}) for i in range(n - 1))
    return TreeDecomposition(bags, tuple((i, i + 1) for i in range(n - 2)))


def contract_decomposition(td: TreeDecomposition, mapping: Sequence[int]) -> TreeDecomposition:
    """Decomposition of a contracted graph: rename every bag through the
    old->new id map of the contraction (width never grows)."""
    bags = tuple(frozenset(mapping[v] for v in bag) for bag in td.bags)
    return TreeDecomposition(bags, td.tree_edges)


# -- PACE .td format -----------------------------------------------------------

def format_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    for a, b in td.tree_edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Parse PACE ``.td`` text (1-based ids). Returns the decomposition
    (0-based) and the declared vertex count."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if len(parts) != 5 or parts[1] != "td":
                    raise TdParseError(lineno, "expected 's td <bags> <width+1> <n>'")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise TdParseError(lineno, "bag before header")
                idx = int(parts[1])
                if not 1 <= idx <= header[0]:
                    raise TdParseError(lineno, f"bag id {idx} out of range")
                vs = [int(x) - 1 for x in parts[2:]]
                if any(not 0 <= v < header[2] for v in vs):
                    raise TdParseError(lineno, "vertex id out of range")
                bags[idx - 1] = frozenset(vs)
            else:
                if header is None or len(parts) != 2:
                    raise TdParseError(lineno, "expected a tree edge 'i j'")
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        except ValueError:
            raise TdParseError(lineno, f"malformed line {line!r}") from None
    if header is None:
        raise TdParseError(0, "missing 's td' header")
    if sorted(bags) != list(range(header[0])):
        raise TdParseError(0, "bag ids do not cover 1..num_bags")
    td = TreeDecomposition(tuple(bags[i] for i in range(header[0])), tuple(edges))
    if td.width + 1 != header[1]:
        raise TdParseError(0, f"header width {header[1] - 1} differs from actual {td.width}")
    return td, header[2]


# -- dynamic programming ---------------------------------------------------------
#
# A table has shape (K, 3**b): row = partial solution size (sizes >= K are
# never needed, K being one more than a greedy solution), column = the bag
# states packed in base 3, bag position i carrying weight 3**i.

def _digit_view(t: np.ndarray, b: int, a: int) -> np.ndarray:
    """View of ``t`` whose third axis is the state of bag position ``a``."""
    return t.reshape(t.shape[0], 3 ** (b - a - 1), 3, 3 ** a)


@lru_cache(maxsize=None)
def _in_counts(b: int) -> np.ndarray:
    counts = np.zeros(3 ** b, dtype=np.int64)
    for a in range(b):
        counts += (np.arange(3 ** b) // 3 ** a) % 3 == IN
    return counts


def _pack(states: Sequence[int]) -> int:
    return sum(s * 3 ** i for i, s in enumerate(states))


def _unpack(col: int, b: int) -> list[int]:
    out = []
    for _ in range(b):
        col, s = divmod(col, 3)
        out.append(s)
    return out


class _Node:
    __slots__ = ("kind", "bag", "table", "children", "vertex", "axis", "neighbour_axes", "perm")

    def __init__(self, kind, bag, table, children=(), vertex=None, axis=None,
                 neighbour_axes=(), perm=None):
        self.kind = kind
        self.bag = bag
        self.table = table
        self.children = children
        self.vertex = vertex
        self.axis = axis
        self.neighbour_axes = neighbour_axes
        self.perm = perm


def _compact(td: TreeDecomposition) -> TreeDecomposition:
    """Merge every bag into a tree neighbour that contains it."""
    bags = list(td.bags)
    nbrs = [set(x) for x in td.neighbours()]
    alive = set(range(len(bags)))
    changed = True
    while changed:
        changed = False
        for i in sorted(alive):
            j = next((j for j in sorted(nbrs[i]) if bags[i] <= bags[j]), None)
            if j is None:
                continue
            for x in nbrs[i] - {j}:
                nbrs[x].discard(i)
                nbrs[x].add(j)
                nbrs[j].add(x)
            nbrs[j].discard(i)
            nbrs[i] = set()
            alive.discard(i)
            changed = True
    index = {old: new for new, old in enumerate(sorted(alive))}
    edges = sorted({(min(index[i], index[j]), max(index[i], index[j]))
                    for i in alive for j in nbrs[i]})
    return TreeDecomposition(tuple(bags[i] for i in sorted(alive)), tuple(edges))


def _greedy_size(g: Graph) -> int:
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    undominated = g.full_mask
    size = 0
    while undominated:
        best = max(range(g.n), key=lambda w: (closed[w] & undominated).bit_count())
        undominated &= ~closed[best]
        size += 1
    return size


class _DP:
    def __init__(self, g: Graph, td: TreeDecomposition, keep: bool):
        self.g = g
        self.td = _compact(td)
        self.keep = keep
        self.size_cap = _greedy_size(g) + 1
        # partial-solution counts are at most 2**n
        self.dtype = np.int64 if g.n <= 62 else object

    def _node(self, kind, bag, table, children, **kw) -> _Node:
        return _Node(kind, bag, table, children if self.keep else (), **kw)

    def leaf(self) -> _Node:
        t = np.zeros((self.size_cap, 1), dtype=self.dtype)
        t[0, 0] = 1
        return _Node("leaf", [], t)

    def introduce(self, node: _Node, v: int) -> _Node:
        t = node.table
        b = len(node.bag)
        row = self.g.adj[v]
        nb_axes = tuple(i for i, w in enumerate(node.bag) if row >> w & 1)
        out = np.zeros((t.shape[0], 3, t.shape[1]), dtype=self.dtype)
        if nb_axes:
            taken = t.copy()
            free = t.copy()
            for a in nb_axes:
                view = _digit_view(taken, b, a)
                view[:, :, DOM] += view[:, :, UND]
                view[:, :, UND] = 0
                _digit_view(free, b, a)[:, :, IN] = 0
            out[1:, IN] = taken[:-1]
            out[:, DOM] = t - free
            out[:, UND] = free
        else:
            out[1:, IN] = t[:-1]
            out[:, UND] = t
        return self._node("introduce", node.bag + [v], out.reshape(t.shape[0], -1), (node,),
                          vertex=v, neighbour_axes=nb_axes)

    def forget(self, node: _Node, v: int) -> _Node:
        a = node.bag.index(v)
        view = _digit_view(node.table, len(node.bag), a)
        table = (view[:, :, IN] + view[:, :, DOM]).reshape(view.shape[0], -1)
        bag = node.bag[:a] + node.bag[a + 1:]
        return self._node("forget", bag, table, (node,), vertex=v, axis=a)

    def align(self, node: _Node, order: list[int]) -> _Node:
        if node.bag == order:
            return node
        b = len(order)
        perm = [node.bag.index(v) for v in order]
        k = node.table.shape[0]
        # C order puts bag position b-1 on the first state axis
        t = node.table.reshape((k,) + (3,) * b)
        axes = [0] + [b - perm[b - 1 - i] for i in range(b)]
        table = np.ascontiguousarray(np.transpose(t, axes)).reshape(k, -1)
        return self._node("permute", list(order), table, (node,), perm=perm)

    def _zeta(self, t: np.ndarray, b: int, sign: int) -> np.ndarray:
        # sign=+1: "dominated" becomes "dominated or not"; sign=-1 undoes it
        t = t.copy()
        for a in range(b):
            view = _digit_view(t, b, a)
            if sign > 0:
                view[:, :, DOM] += view[:, :, UND]
            else:
                view[:, :, DOM] -= view[:, :, UND]
        return t

    def join(self, left: _Node, right: _Node) -> _Node:
        b = len(left.bag)
        cap = self.size_cap
        lt = self._zeta(left.table, b, 1)
        rt = self._zeta(right.table, b, 1)
        prod = np.zeros((2 * cap, lt.shape[1]), dtype=self.dtype)
        for i in range(cap):
            if lt[i].any():
                prod[i:i + cap] += lt[i] * rt
        # members of the bag are counted on both sides
        ins = _in_counts(b)
        rows = np.arange(cap)[:, None] + ins[None, :]
        out = prod[np.minimum(rows, 2 * cap - 1), np.arange(lt.shape[1])[None, :]]
        out[rows >= 2 * cap] = 0
        return self._node("join", list(left.bag), self._zeta(out, b, -1), (left, right))

    def build(self, root: int = 0) -> _Node:
        td = self.td
        nbrs = td.neighbours()
        parent: dict[int, int | None] = {root: None}
        order = [root]
        for x in order:
            for y in nbrs[x]:
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        results: dict[int, _Node] = {}
        for x in reversed(order):
            bag = td.bags[x]
            target = sorted(bag)
            kids = [y for y in nbrs[x] if parent[y] == x]
            nodes = []
            for y in kids or [None]:
                node = self.leaf() if y is None else results.pop(y)
                for v in list(node.bag):
                    if v not in bag:
                        node = self.forget(node, v)
                for v in target:
                    if v not in node.bag:
                        node = self.introduce(node, v)
                nodes.append(self.align(node, target))
            node = nodes[0]
            for other in nodes[1:]:
                node = self.join(node, other)
            results[x] = node
        node = results[root]
        for v in list(node.bag):
            node = self.forget(node, v)
        return node


def _reconstruct(dp: _DP, root: _Node, k: int) -> list[int]:
    """Walk back from the root, choosing at each node a child state that
    has a nonzero count and is consistent with the current one."""
    chosen: list[int] = []
    stack = [(root, k, ())]
    while stack:
        node, k, c = stack.pop()
        kind = node.kind
        if kind == "leaf":
            assert k == 0
        elif kind == "forget":
            child = node.children[0]
            a = node.axis
            for s in (IN, DOM):
                cc = c[:a] + (s,) + c[a:]
                if child.table[k, _pack(cc)] > 0:
                    stack.append((child, k, cc))
                    break
            else:
                raise AssertionError("inconsistent DP table at forget node")
        elif kind == "permute":
            cc = [0] * len(c)
            for pos, p in enumerate(node.perm):
                cc[p] = c[pos]
            stack.append((node.children[0], k, tuple(cc)))
        elif kind == "introduce":
            child = node.children[0]
            base, sv = c[:-1], c[-1]
            if sv != IN:
                stack.append((child, k, base))
                continue
            chosen.append(node.vertex)
            options = [(DOM, UND) if a in node.neighbour_axes and s == DOM else (s,)
                       for a, s in enumerate(base)]
            for cc in itertools.product(*options):
                if child.table[k - 1, _pack(cc)] > 0:
                    stack.append((child, k - 1, cc))
                    break
            else:
                raise AssertionError("inconsistent DP table at introduce node")
        elif kind == "join":
            left, right = node.children
            s = sum(1 for x in c if x == IN)
            options = [((DOM, DOM), (DOM, UND), (UND, DOM)) if x == DOM else ((x, x),) for x in c]
            found = None
            for combo in itertools.product(*options):
                cl = tuple(p[0] for p in combo)
                cr = tuple(p[1] for p in combo)
                for i in range(s, k + 1):
                    j = k + s - i
                    if j < dp.size_cap and left.table[i, _pack(cl)] > 0 \
                            and right.table[j, _pack(cr)] > 0:
                        found = (i, cl, j, cr)
                        break
                if found:
                    break
            if found is None:
                raise AssertionError("inconsistent DP table at join node")
            i, cl, j, cr = found
            stack.append((left, i, cl))
            stack.append((right, j, cr))
    return sorted(chosen)


def _dp_gamma(g: Graph, td: TreeDecomposition, witness: bool) -> tuple[int, list[int] | None]:
    dp = _DP(g, td, keep=witness)
    root = dp.build()
    k = int(np.nonzero(root.table[:, 0])[0][0])
    return k, (_reconstruct(dp, root, k) if witness else None)


def gamma_via_treewidth(g: Graph, td: TreeDecomposition | None = None,
                        witness: bool = True) -> GammaResult:
    """Exact domination number by dynamic programming over ``td``
    (a min-fill decomposition when omitted).

    Without ``witness`` the returned certificate is empty (size 0).
    """
    if g.n == 0:
        raise GraphError("domination number of the empty graph is undefined")
    if td is None:
        td = heuristic_tree_decomposition(g)
    else:
        validate_decomposition(g, td)
    k, chosen = _dp_gamma(g, td, witness)
    cert = DominationCertificate.of(g, chosen or ())
    if witness:
        assert cert.is_dominating and cert.size == k
    return GammaResult(k, cert)


def decide_kec_via_treewidth(g: Graph, k: int, td: TreeDecomposition | None = None) -> KecAnswer:
    """k-Edge-Contraction(gamma) for k = 1, 2 by recomputing gamma with the DP
    after every contraction sequence of at most ``k`` edges. The
    decomposition of each contracted graph is obtained by renaming bags, so
    its width never exceeds that of ``td``."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    require_connected(g)
    if td is None:
        td = heuristic_tree_decomposition(g)
    else:
        validate_decomposition(g, td)
    target = _dp_gamma(g, td, False)[0] - 1
    if target < 1:
        return KecAnswer(False)
    level = [(g, td, ())]
    for _ in range(k):
        nxt = []
        seen = set()
        for h, htd, steps in level:
            for e in h.edges():
                h2, mapping = contract_edge(h, e)
                if h2.adj in seen:
                    continue
                seen.add(h2.adj)
                td2 = contract_decomposition(htd, mapping)
                if _dp_gamma(h2, td2, False)[0] <= target:
                    return KecAnswer(True, steps + (e,))
                nxt.append((h2, td2, steps + (e,)))
        level = nxt
    return KecAnswer(False)
