"""Cross-check suites: every structural claim the library relies on,
tested against an independent brute-force oracle. Shared by the
``verify`` CLI command and the acceptance tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .contraction import (
    contraction_number,
    ct_bruteforce,
    decide_kec,
    solve_domination_via_ec_oracle,
)
from .domination import (
    DominationCertificate,
    enumerate_minimum_dominating_sets,
    find_gamma_plus_one_with_two_edges,
    find_nonstable_mds,
    gamma_number,
)
from .generate import (
    connected_graphs,
    connected_graphs_hereditary,
    random_connected_graph,
    random_split_graph,
)
from .graph import Graph, delete_vertices, subdivide_all_edges_3
from .p5free import solve_p5_free
from .recognition import find_induced_path_through, is_2k2_free, is_pt_free
from .reductions import (
    EXACTLY_3_BOUNDED,
    CnfInstance,
    ONE_IN_THREE,
    build_1ec_instance,
    build_ct2_instance,
    build_ct3_instance,
    build_h_graph,
    ct2_target,
    ct3_target,
    random_exactly_3_bounded,
    random_one_in_three,
    toy_sat_enumerate,
)
from .treewidth import (
    decide_kec_via_treewidth,
    gamma_via_treewidth,
    heuristic_tree_decomposition,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checked: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 10:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks in {self.seconds:.1f}s"
        if self.notes:
            text += " (" + "; ".join(self.notes) + ")"
        if self.failures:
            text += " first failure: " + self.failures[0]
        return text


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    start = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - start
    return res


def _connected_range(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from connected_graphs(n)


def check_h_fixture() -> SuiteResult:
    def body(res: SuiteResult) -> None:
        h = build_h_graph()
        g = h.graph
        one_three = h.vertices(["H:1", "H:3"])
        mds = [h.describe(c.vertices) for c in enumerate_minimum_dominating_sets(g)]
        two = find_gamma_plus_one_with_two_edges(g)
        facts = {
            "gamma(H) = 3": gamma_number(g) == 3,
            "gamma(H - {1,3}) = 3": gamma_number(delete_vertices(g, one_three)) == 3,
            "unique MDS {3,4,11}": [set(m) for m in mds] == [{"H:3", "H:4", "H:11"}],
            "gamma+1 set with two edges": two is not None
            and DominationCertificate.of(g, two.vertices).is_dominating
            and two.size == 4 and two.induced_edge_count >= 2,
            "ct(H) = 2": contraction_number(g).value == 2,
        }
        for fact, ok in facts.items():
            res.checked += 1
            if not ok:
                res.fail(fact)
    return _timed("H fixture", body)


def check_characterization(max_n: int = 8, random_count: int = 500,
                           random_n: tuple[int, int] = (9, 12), seed: int = 0) -> SuiteResult:
    def one(res: SuiteResult, g: Graph, where: str) -> None:
        res.checked += 1
        ct = contraction_number(g)
        brute = ct_bruteforce(g, 3)
        expect = brute.k if brute is not None else None
        if ct.value != expect:
            res.fail(f"{where}: characterization {ct.value}, brute force {expect}: {g!r}")
        if ct.gamma >= 2 and (ct.value is None or ct.value > 3):
            res.fail(f"{where}: ct above 3: {g!r}")

    def body(res: SuiteResult) -> None:
        for g in _connected_range(2, max_n):
            one(res, g, f"n={g.n}")
        rng = random.Random(seed)
        for i in range(random_count):
            n = rng.randint(*random_n)
            one(res, random_connected_graph(n, rng.uniform(0.0, 0.35), rng), f"random #{i}")
    return _timed("characterization vs brute force", body)


def check_subdivision(max_n: int = 7) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for g in _connected_range(2, max_n):
            res.checked += 1
            s = subdivide_all_edges_3(g)
            if gamma_number(s) != gamma_number(g) + g.m:
                res.fail(f"gamma formula: {g!r}")
            if bool(decide_kec(g, 1)) != bool(decide_kec(s, 1)):
                res.fail(f"1-EC answer changes: {g!r}")
    return _timed("3-subdivision", body)


def check_ct3(count: int = 20, seed: int = 0, max_vars: int = 6, max_clauses: int = 3,
              extra_unsat: bool = True) -> SuiteResult:
    def one(res: SuiteResult, phi: CnfInstance) -> bool:
        res.checked += 1
        sat, _ = toy_sat_enumerate(phi, ONE_IN_THREE)
        g = build_ct3_instance(phi).graph
        tight = gamma_number(g) == ct3_target(phi)
        three = contraction_number(g).value == 3
        if not sat == tight == three:
            res.fail(f"sat={sat} gamma-tight={tight} ct3={three}: {phi}")
        return sat

    def body(res: SuiteResult) -> None:
        rng = random.Random(seed)
        sats = 0
        for _ in range(count):
            nv = rng.randint(3, max_vars)
            nc = rng.randint(max(1, nv // 2), max_clauses)
            sats += one(res, random_one_in_three(nv, nc, rng))
        res.notes.append(f"{sats} satisfiable")
        if extra_unsat:
            # no formula within the sampled sizes is unsatisfiable; this is
            # the smallest unsatisfiable one (each variable in 3 of 4 clauses)
            phi = CnfInstance.of(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
            one(res, phi)
            res.notes.append("plus 1 unsatisfiable 4-clause formula")
    return _timed("ct3 reduction", body)


def check_ct2(count: int = 10, seed: int = 0, var_counts: tuple[int, ...] = (4, 5),
              min_unsat: int = 2, budget_seconds: float | None = None) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        rng = random.Random(seed)
        done = unsat = 0
        while done < count or unsat < min_unsat:
            phi = random_exactly_3_bounded(rng.choice(var_counts), rng)
            sat, _ = toy_sat_enumerate(phi, EXACTLY_3_BOUNDED)
            if sat and done >= count:
                continue
            start = time.perf_counter()
            g = build_ct2_instance(phi).graph
            tight = gamma_number(g) == ct2_target(phi)
            two = contraction_number(g).value == 2
            if budget_seconds is not None and time.perf_counter() - start > budget_seconds:
                res.notes.append(f"replaced slow instance {phi}")
                continue
            res.checked += 1
            done += 1
            unsat += not sat
            if not sat == tight == two:
                res.fail(f"sat={sat} gamma-tight={tight} ct2={two}: {phi}")
        res.notes.append(f"{unsat} unsatisfiable")
    return _timed("ct2 reduction", body)


def check_1ec(max_n: int = 6, ells: tuple[int, ...] = (1, 2, 3)) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for g in _connected_range(1, max_n):
            gv = gamma_number(g)
            for ell in ells:
                res.checked += 1
                try:
                    gp = build_1ec_instance(g, ell).graph
                except AssertionError as exc:
                    res.fail(f"twins: {exc}")
                    continue
                if gamma_number(gp) != min(gv + 1, ell + 1):
                    res.fail(f"gamma formula, ell={ell}: {g!r}")
                if bool(decide_kec(gp, 1)) != (gv <= ell):
                    res.fail(f"1-EC answer, ell={ell}: {g!r}")
    return _timed("1-EC reduction", body)


def check_p9_free(count: int = 50, seed: int = 0, max_n: int = 7, max_ell: int = 2) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        rng = random.Random(seed)
        for _ in range(count):
            g = random_split_graph(rng.randint(2, max_n), rng)
            ell = rng.randint(1, max_ell)
            res.checked += 1
            if not is_2k2_free(g):
                res.fail(f"generator produced a 2K2: {g!r}")
            check = is_pt_free(build_1ec_instance(g, ell).graph, 9, budget=None)
            if not check.free:
                res.fail(f"induced P9 for ell={ell}: {g!r}")
    return _timed("P9-freeness of G'", body)


def p5_free_graphs(n: int) -> list[Graph]:
    return connected_graphs_hereditary(
        n, lambda g, v: find_induced_path_through(g, 5, v, budget=None) is None)


def check_p5(max_n: int = 9) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        big = 0
        for n in range(2, max_n + 1):
            for g in p5_free_graphs(n):
                for k in (1, 2):
                    res.checked += 1
                    if bool(solve_p5_free(g, k)) != bool(decide_kec(g, k)):
                        res.fail(f"k={k}: {g!r}")
                if gamma_number(g) >= 3:
                    big += 1
                    if find_nonstable_mds(g) is None:
                        res.fail(f"gamma >= 3 without a non-stable MDS: {g!r}")
        res.notes.append(f"{big} graphs with gamma >= 3")
    return _timed("P5-free fast path", body)


def check_treewidth(max_n: int = 9, random_count: int = 100, random_max_n: int = 30,
                    max_width: int = 6, kec_max_n: int = 8, seed: int = 0) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for g in _connected_range(1, max_n):
            res.checked += 1
            if gamma_via_treewidth(g).gamma != gamma_number(g):
                res.fail(f"DP gamma: {g!r}")
        rng = random.Random(seed)
        done = 0
        while done < random_count:
            n = rng.randint(10, random_max_n)
            g = random_connected_graph(n, rng.uniform(0.0, 0.15), rng)
            td = heuristic_tree_decomposition(g)
            if td.width > max_width:
                continue
            done += 1
            res.checked += 1
            if gamma_via_treewidth(g, td).gamma != gamma_number(g):
                res.fail(f"DP gamma on random graph: {g!r}")
        for g in _connected_range(2, kec_max_n):
            for k in (1, 2):
                res.checked += 1
                if bool(decide_kec_via_treewidth(g, k)) != bool(decide_kec(g, k)):
                    res.fail(f"k={k}: {g!r}")
    return _timed("tree-width DP", body)


def check_self_reduction(max_n: int = 8, ells: tuple[int, ...] = (1, 2, 3)) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for g in _connected_range(1, max_n):
            gv = gamma_number(g)
            for ell in ells:
                res.checked += 1
                if solve_domination_via_ec_oracle(g, ell) != (gv <= ell):
                    res.fail(f"ell={ell}: {g!r}")
    return _timed("self-reduction", body)


def run_suite(max_n: int = 8, seed: int = 0) -> list[SuiteResult]:
    """All suites scaled by ``max_n`` (the exhaustive graph order)."""
    small = max(2, max_n - 2)
    return [
        check_h_fixture(),
        check_characterization(max_n=max_n, random_count=100, seed=seed),
        check_subdivision(max_n=min(max_n, 7)),
        check_ct3(count=5, seed=seed, max_vars=5, max_clauses=2),
        check_ct2(count=3, seed=seed, min_unsat=1),
        check_1ec(max_n=min(small, 6)),
        check_p9_free(count=10, seed=seed),
        check_p5(max_n=max_n),
        check_treewidth(max_n=max_n, random_count=20, kec_max_n=small, seed=seed),
        check_self_reduction(max_n=max_n),
    ]
