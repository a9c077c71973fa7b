"""Instance generators: the SAT and Dominating Set reductions to the
contraction problems, the fixed graph H, and the subdivision lifting.

Every builder returns a :class:`GadgetGraph` whose labels name each vertex
by its role in the construction, so solver witnesses can be read back.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .domination import DominationCertificate, is_dominating
from .graph import (
    Edge,
    Graph,
    GraphError,
    are_false_twins,
    are_true_twins,
    induced_subgraph,
    require_connected,
    subdivide_edge,
)

ONE_IN_THREE = "one_in_three_positive"
EXACTLY_3_BOUNDED = "exactly_3_bounded"
FLAVORS = (ONE_IN_THREE, EXACTLY_3_BOUNDED)


class CnfError(ValueError):
    pass


class DimacsParseError(CnfError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class FlavorError(CnfError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class CnfInstance:
    """Variables are 1..num_vars; a literal is a nonzero signed index."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, num_vars: int, clauses: Iterable[Sequence[int]]) -> "CnfInstance":
        cs = tuple(tuple(c) for c in clauses)
        for c in cs:
            for lit in c:
                if lit == 0 or abs(lit) > num_vars:
                    raise CnfError(f"literal {lit} out of range for {num_vars} variables")
        return cls(num_vars, cs)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str) -> CnfInstance:
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        last_line = lineno
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsParseError(lineno, "second problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(lineno, "expected 'p cnf <vars> <clauses>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsParseError(lineno, "non-integer counts in problem line") from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsParseError(lineno, "negative counts in problem line")
            continue
        if header is None:
            raise DimacsParseError(lineno, "clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsParseError(lineno, f"bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > header[0]:
                raise DimacsParseError(lineno, f"literal {lit} exceeds {header[0]} variables")
            else:
                current.append(lit)
    if header is None:
        raise DimacsParseError(last_line, "missing problem line")
    if current:
        raise DimacsParseError(last_line, "last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise DimacsParseError(last_line, f"expected {header[1]} clauses, found {len(clauses)}")
    return CnfInstance.of(header[0], clauses)


def validate_flavor(phi: CnfInstance, flavor: str) -> list[str]:
    """Violations of the restricted-SAT flavor (empty when ``phi`` is valid)."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    out = []
    for i, c in enumerate(phi.clauses):
        if len({abs(lit) for lit in c}) != len(c):
            out.append(f"clause {i} repeats a variable")
    if flavor == ONE_IN_THREE:
        for i, c in enumerate(phi.clauses):
            if len(c) != 3:
                out.append(f"clause {i} has {len(c)} literals, expected 3")
            if any(lit < 0 for lit in c):
                out.append(f"clause {i} has a negative literal")
        return out
    if phi.num_vars < 4:
        out.append(f"{phi.num_vars} variables, at least 4 required")
    for i, c in enumerate(phi.clauses):
        if len(c) not in (2, 3):
            out.append(f"clause {i} has {len(c)} literals, expected 2 or 3")
    pos = [0] * (phi.num_vars + 1)
    neg = [0] * (phi.num_vars + 1)
    for c in phi.clauses:
        for lit in c:
            (pos if lit > 0 else neg)[abs(lit)] += 1
    for x in range(1, phi.num_vars + 1):
        if sorted((pos[x], neg[x])) != [1, 2]:
            out.append(f"variable {x} occurs {pos[x]} times positively and "
                       f"{neg[x]} times negatively, expected 2 and 1 in some order")
    return out


def require_flavor(phi: CnfInstance, flavor: str) -> None:
    violations = validate_flavor(phi, flavor)
    if violations:
        raise FlavorError(violations)


def _clause_ok(clause: Sequence[int], assignment: Sequence[bool], flavor: str) -> bool:
    true_lits = sum(1 for lit in clause if assignment[abs(lit)] == (lit > 0))
    return true_lits == 1 if flavor == ONE_IN_THREE else true_lits >= 1


def toy_sat_enumerate(phi: CnfInstance, flavor: str) -> tuple[bool, tuple[bool, ...] | None]:
    """Exhaustive search over all assignments. One-in-three semantics asks
    for exactly one true literal per clause, the other flavor for at least
    one. Returns the first satisfying assignment (index 0 unused)."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if phi.num_vars > 24:
        raise CnfError("too many variables for exhaustive enumeration")
    for values in itertools.product((False, True), repeat=phi.num_vars):
        assignment = (False,) + values
        if all(_clause_ok(c, assignment, flavor) for c in phi.clauses):
            return True, assignment
    return False, None


def is_linked(phi: CnfInstance) -> bool:
    """Every variable occurs and the variable/clause incidence graph is
    connected (so the gadget graphs built from ``phi`` are connected)."""
    parent = list(range(phi.num_vars + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    used = set()
    for c in phi.clauses:
        vs = [abs(lit) for lit in c]
        used.update(vs)
        for a in vs[1:]:
            parent[find(a)] = find(vs[0])
    roots = {find(x) for x in range(1, phi.num_vars + 1)}
    return len(used) == phi.num_vars and len(roots) <= 1


def random_one_in_three(num_vars: int, num_clauses: int, rng: random.Random,
                        max_tries: int = 10_000) -> CnfInstance:
    """Clauses of three distinct variables drawn uniformly, resampled until
    every variable occurs and the formula does not split."""
    if num_vars < 3:
        raise ValueError("need at least 3 variables")
    if 2 * num_clauses + 1 < num_vars:
        # each clause after the first adds at most two new variables
        raise ValueError("too few clauses for a linked formula")
    for _ in range(max_tries):
        clauses = [tuple(sorted(rng.sample(range(1, num_vars + 1), 3)))
                   for _ in range(num_clauses)]
        phi = CnfInstance.of(num_vars, clauses)
        if is_linked(phi):
            return phi
    raise RuntimeError("could not sample a linked formula")


def random_exactly_3_bounded(num_vars: int, rng: random.Random, max_tries: int = 10_000
                             ) -> CnfInstance:
    """Each variable gets two occurrences of one polarity and one of the
    other; the 3n occurrence slots are shuffled and cut into clauses of two
    or three literals, retrying until no clause repeats a variable."""
    if num_vars < 4:
        raise ValueError("need at least 4 variables")
    for _ in range(max_tries):
        slots = []
        for x in range(1, num_vars + 1):
            sign = rng.choice((1, -1))
            slots += [sign * x, sign * x, -sign * x]
        rng.shuffle(slots)
        sizes = []
        left = len(slots)
        while left:
            if left in (2, 3):
                s = left
            elif left == 4:
                s = 2
            else:
                s = rng.choice((2, 3))
            sizes.append(s)
            left -= s
        clauses = []
        pos = 0
        for s in sizes:
            clauses.append(tuple(slots[pos:pos + s]))
            pos += s
        if all(len({abs(lit) for lit in c}) == len(c) for c in clauses):
            phi = CnfInstance.of(num_vars, clauses)
            assert not validate_flavor(phi, EXACTLY_3_BOUNDED)
            return phi
    raise RuntimeError("could not sample a well-formed formula")


# -- gadget graphs -------------------------------------------------------------

@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph

    @property
    def labels(self) -> tuple[str, ...]:
        assert self.graph.labels is not None
        return self.graph.labels

    def vertex(self, label: str) -> int:
        return self.graph.index_of(label)

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return [self.vertex(s) for s in labels]

    def describe(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]


class _Builder:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def add(self, label: str) -> int:
        if label in self.index:
            raise GraphError(f"duplicate label {label}")
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def join(self, a: str, b: str) -> None:
        u, v = self.index[a], self.index[b]
        self.edges.add((min(u, v), max(u, v)))

    def build(self) -> GadgetGraph:
        g = Graph.from_edges(len(self.labels), sorted(self.edges), self.labels)
        require_connected(g)
        return GadgetGraph(g)


H_EDGES = ((1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 9), (6, 8), (7, 8), (7, 11),
           (8, 9), (8, 11), (9, 10), (9, 11), (10, 11), (11, 12), (2, 12))


def _add_h(b: _Builder) -> None:
    for i in range(1, 13):
        b.add(f"H:{i}")
    for x, y in H_EDGES:
        b.join(f"H:{x}", f"H:{y}")


def build_h_graph() -> GadgetGraph:
    """The fixed 12-vertex graph H; vertex ``H:i`` has id ``i - 1``."""
    b = _Builder()
    _add_h(b)
    return b.build()


def build_ct3_instance(phi: CnfInstance, false_literal_edges: bool = False) -> GadgetGraph:
    """Graph for a one-in-three positive formula whose contraction number
    is 3 exactly when the formula is satisfiable.

    Per variable a triangle ``T[x] F[x] u[x]``. Per clause ``c`` and
    position ``i`` a path ``T[x_i] - t - a - b - lit`` and a vertex
    ``litp`` adjacent to ``F[x_i]``; the clique ``K[c,1..3]`` has ``lit``
    joined to the two members for the other positions and ``litp`` to its
    own. ``false_literal_edges`` additionally joins ``F[x_i]`` to ``lit``.
    """
    require_flavor(phi, ONE_IN_THREE)
    b = _Builder()
    for x in range(1, phi.num_vars + 1):
        for role in ("T", "F", "u"):
            b.add(f"{role}[{x}]")
        b.join(f"T[{x}]", f"F[{x}]")
        b.join(f"T[{x}]", f"u[{x}]")
        b.join(f"F[{x}]", f"u[{x}]")
    for ci, clause in enumerate(phi.clauses, 1):
        for i in range(1, 4):
            for role in ("t", "a", "b", "lit", "litp", "K"):
                b.add(f"{role}[{ci},{i}]")
        for i in range(1, 4):
            for j in range(i + 1, 4):
                b.join(f"K[{ci},{i}]", f"K[{ci},{j}]")
        for i, x in enumerate(clause, 1):
            key = f"[{ci},{i}]"
            b.join(f"T[{x}]", "t" + key)
            b.join("t" + key, "a" + key)
            b.join("a" + key, "b" + key)
            b.join("b" + key, "lit" + key)
            b.join("litp" + key, f"F[{x}]")
            b.join("litp" + key, "K" + key)
            for j in range(1, 4):
                if j != i:
                    b.join("lit" + key, f"K[{ci},{j}]")
            if false_literal_edges:
                b.join(f"F[{x}]", "lit" + key)
    return b.build()


def ct3_target(phi: CnfInstance) -> int:
    """gamma of the ct3 gadget exactly when ``phi`` is satisfiable."""
    return phi.num_vars + 4 * len(phi.clauses)


def build_ct2_instance(phi: CnfInstance) -> GadgetGraph:
    """Graph for an exactly-3-bounded formula whose contraction number is 2
    exactly when the formula is satisfiable: one copy of H, a variable
    gadget per variable and a clause edge ``c - tc`` per clause."""
    require_flavor(phi, EXACTLY_3_BOUNDED)
    b = _Builder()
    _add_h(b)
    for x in range(1, phi.num_vars + 1):
        b.add(f"var[{x}]")
        b.add(f"varbar[{x}]")
        for j in range(1, 5):
            b.add(f"v[{x},{j}]")
        b.join(f"var[{x}]", f"varbar[{x}]")
        b.join(f"var[{x}]", f"v[{x},1]")
        b.join(f"varbar[{x}]", f"v[{x},1]")
        for j in range(1, 4):
            b.join(f"v[{x},{j}]", f"v[{x},{j + 1}]")
    for ci, clause in enumerate(phi.clauses, 1):
        b.add(f"c[{ci}]")
        b.add(f"tc[{ci}]")
        b.join(f"c[{ci}]", f"tc[{ci}]")
        b.join(f"tc[{ci}]", "H:1")
        b.join(f"tc[{ci}]", "H:3")
        for lit in clause:
            b.join(f"c[{ci}]", f"var[{lit}]" if lit > 0 else f"varbar[{-lit}]")
    return b.build()


def ct2_target(phi: CnfInstance) -> int:
    return 2 * phi.num_vars + 3


def build_1ec_instance(g: Graph, ell: int, check_twins: bool = True) -> GadgetGraph:
    """Graph G' with gamma(G') = min(gamma(g) + 1, ell + 1) in which a single
    contraction lowers gamma iff gamma(g) <= ell.

    Copies ``copy[p,k]`` of vertex k for p = 0..ell carry g's edges within
    and across copies; ``copy[i,k]`` is also joined to ``copy[0,k]``.
    ``x[i]`` sees copy 0 and copy i, ``x[ell+1]`` sees copy 0, and ``y``
    hangs off ``x[ell+1]``.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    require_connected(g)
    b = _Builder()
    n = g.n
    for p in range(ell + 1):
        for k in range(n):
            b.add(f"copy[{p},{k}]")
    for i in range(1, ell + 2):
        b.add(f"x[{i}]")
    b.add("y")
    for u, v in g.edges():
        for p in range(ell + 1):
            for q in range(ell + 1):
                b.join(f"copy[{p},{u}]", f"copy[{q},{v}]")
    for i in range(1, ell + 1):
        for k in range(n):
            b.join(f"copy[{i},{k}]", f"copy[0,{k}]")
    for k in range(n):
        for i in range(1, ell + 2):
            b.join(f"x[{i}]", f"copy[0,{k}]")
        for i in range(1, ell + 1):
            b.join(f"x[{i}]", f"copy[{i},{k}]")
    b.join(f"x[{ell + 1}]", "y")
    out = b.build()
    if check_twins:
        check_1ec_twins(out, n, ell)
    return out


def check_1ec_twins(gg: GadgetGraph, n: int, ell: int) -> None:
    """Assert the twin relations between copies that the construction promises."""
    g = gg.graph
    for i in range(1, ell + 1):
        sub, old_to_new = induced_subgraph(
            g, [gg.vertex(f"copy[{p},{k}]") for p in (0, i) for k in range(n)])
        for k in range(n):
            a = old_to_new[gg.vertex(f"copy[{i},{k}]")]
            z = old_to_new[gg.vertex(f"copy[0,{k}]")]
            if not are_true_twins(sub, a, z):
                raise AssertionError(f"copy[{i},{k}] and copy[0,{k}] are not true twins")
    if ell >= 2:
        sub, old_to_new = induced_subgraph(
            g, [gg.vertex(f"copy[{p},{k}]") for p in range(1, ell + 1) for k in range(n)])
        for i, j in itertools.combinations(range(1, ell + 1), 2):
            for k in range(n):
                a = old_to_new[gg.vertex(f"copy[{i},{k}]")]
                z = old_to_new[gg.vertex(f"copy[{j},{k}]")]
                if not are_false_twins(sub, a, z):
                    raise AssertionError(f"copy[{i},{k}] and copy[{j},{k}] are not false twins")


def lift_dominating_set_through_subdivision(g: Graph, d: Iterable[int], e: Sequence[int]
                                            ) -> tuple[Graph, tuple[int, ...]]:
    """Subdivide ``e = uv`` three times (``e1`` next to ``u``) and extend the
    dominating set ``d`` of ``g`` by one subdivision vertex so that it
    dominates the new graph. Returns the new graph and the extended set."""
    d = set(d)
    if not is_dominating(g, d):
        raise GraphError("d does not dominate g")
    u, v = e
    h = subdivide_edge(g, (u, v), 3)
    e1, e2, e3 = g.n, g.n + 1, g.n + 2
    if u in d and v in d:
        extra = e1
    elif u in d:
        extra = e3
    elif v in d:
        extra = e1
    else:
        extra = e2
    out = tuple(sorted(d | {extra}))
    cert = DominationCertificate.of(h, out)
    assert cert.is_dominating and cert.size == len(d) + 1
    return h, out
