"""Command-line front end.

Every command prints one line of ``key=value`` pairs (plus a readable block
with ``--pretty``). Exit codes: 0 ok / yes, 1 no, 2 usage error, 3 bad
input, 4 work budget exceeded. ``GB_WORK_BUDGET`` caps the exponential
searches when ``--budget`` is not given.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence, TextIO

from .contraction import contraction_number, ct_bruteforce, decide_kec
from .domination import GammaResult, WorkBudgetExceeded, gamma, gamma_bounded, Exceeds
from .graph import (
    Graph,
    GraphError,
    contract_edge,
    format_edge_list,
    format_labels,
    parse_edge_list,
    subdivide_all_edges_3,
)
from .p5free import solve_p5_free
from .recognition import class_report, is_2k2_free, is_bipartite, girth, is_pt_free
from .reductions import (
    CnfError,
    build_1ec_instance,
    build_ct2_instance,
    build_ct3_instance,
    build_h_graph,
    parse_dimacs_cnf,
)
from .treewidth import gamma_via_treewidth, parse_td

OK, NO, USAGE, BAD_INPUT, BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str, out: TextIO) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _graph(args) -> Graph:
    return parse_edge_list(_read(args.input))


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get("GB_WORK_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"GB_WORK_BUDGET must be an integer, got {raw!r}") from None
    return None


def _record(out: TextIO, **fields) -> None:
    out.write(" ".join(f"{k}={v}" for k, v in fields.items()) + "\n")


def _ids(vs) -> str:
    return ",".join(map(str, vs)) or "-"


def _edges(es) -> str:
    return ",".join(f"{u}-{v}" for u, v in es) or "-"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -- commands -------------------------------------------------------------------

def cmd_gamma(args, out: TextIO) -> int:
    g = _graph(args)
    method = args.method
    if method == "bb":
        res: GammaResult | Exceeds = gamma(g, _budget(args))
    elif method.startswith("bounded:"):
        try:
            q = int(method.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad bound in --method {method!r}") from None
        res = gamma_bounded(g, q)
        if isinstance(res, Exceeds):
            _record(out, gamma=f">{q}", method=method)
            return NO
    elif method == "treewidth" or method.startswith("treewidth:"):
        td = None
        if ":" in method:
            td, n = parse_td(_read(method.split(":", 1)[1]))
            if n != g.n:
                raise GraphError(f"decomposition is for {n} vertices, graph has {g.n}")
        res = gamma_via_treewidth(g, td)
    else:
        raise UsageError(f"unknown method {method!r}")
    _record(out, gamma=res.gamma, method=method.split(":")[0], witness=_ids(res.witness.vertices))
    if args.pretty:
        out.write(f"  dominating set: {res.witness}\n")
    return OK


def cmd_ct(args, out: TextIO) -> int:
    g = _graph(args)
    ct = contraction_number(g, budget=_budget(args))
    fields = {"ct": "undefined" if ct.undefined else ct.value, "gamma": ct.gamma,
              "basis": ct.basis}
    if args.witness:
        fields["witness"] = _edges(ct.witness)
    _record(out, **fields)
    if args.pretty:
        if ct.certificate is not None:
            out.write(f"  certificate: {ct.certificate}\n")
        for i, e in enumerate(ct.witness, 1):
            out.write(f"  step {i}: contract {e.u}-{e.v}\n")
    return OK


def cmd_kec(args, out: TextIO) -> int:
    g = _graph(args)
    k = args.k
    if args.p5_fast:
        if k not in (1, 2):
            raise UsageError("--p5-fast supports k = 1 or 2")
        ans = solve_p5_free(g, k, validate=args.validate)
        _record(out, answer=_yes(ans.answer), k=k, method="p5", step=ans.step,
                witness=_ids(ans.witness))
        if ans.warning:
            print(f"warning: {ans.warning}", file=sys.stderr)
        return OK if ans else NO
    if k not in (1, 2, 3):
        raise UsageError("k must be 1, 2 or 3")
    res = decide_kec(g, k, _budget(args))
    _record(out, answer=_yes(res.answer), k=k, method="characterization",
            witness=_edges(res.witness))
    return OK if res else NO


def cmd_ctbrute(args, out: TextIO) -> int:
    g = _graph(args)
    res = ct_bruteforce(g, args.kmax, _budget(args))
    if res is None:
        _record(out, ct="none", kmax=args.kmax)
        return NO
    _record(out, ct=res.k, kmax=args.kmax, witness=_edges(res.witness), explored=res.explored)
    return OK


def _emit_gadget(args, gg, out: TextIO) -> int:
    _write(args.output, format_edge_list(gg.graph), out)
    if args.labels:
        _write(args.labels, format_labels(gg.graph), out)
    return OK


def cmd_reduce(args, out: TextIO) -> int:
    if args.kind in ("ct3", "ct2"):
        phi = parse_dimacs_cnf(_read(args.input))
        gg = build_ct3_instance(phi) if args.kind == "ct3" else build_ct2_instance(phi)
    else:
        if args.ell is None:
            raise UsageError("reduce 1ec needs --ell")
        gg = build_1ec_instance(_graph(args), args.ell)
    return _emit_gadget(args, gg, out)


def cmd_transform(args, out: TextIO) -> int:
    g = _graph(args)
    if args.kind == "subdivide3":
        h = subdivide_all_edges_3(g)
    else:
        if not args.edge:
            raise UsageError("transform contract needs -e u,v")
        try:
            u, v = (int(x) for x in args.edge.split(","))
        except ValueError:
            raise UsageError(f"bad edge {args.edge!r}, expected u,v") from None
        h, _ = contract_edge(g, (u, v))
    _write(args.output, format_edge_list(h), out)
    return OK


def cmd_recognize(args, out: TextIO) -> int:
    g = _graph(args)
    budget = _budget(args)
    chosen = args.pt is not None or args.k2k2 or args.girth or args.bipartite
    fields: dict[str, object] = {}
    holds = True
    if not chosen:
        rep = class_report(g, budget)
        _record(out, bipartite=str(rep.bipartite).lower(), girth=rep.girth,
                longest_induced_path=rep.longest_induced_path_order,
                free_2k2=str(rep.is_2k2_free).lower())
        return OK
    if args.pt is not None:
        res = is_pt_free(g, args.pt, budget)
        fields[f"p{args.pt}_free"] = str(res.free).lower()
        if not res.free:
            fields["path"] = _ids(res.path)
        holds &= res.free
    if args.k2k2:
        free = is_2k2_free(g)
        fields["free_2k2"] = str(free).lower()
        holds &= free
    if args.bipartite:
        bip = is_bipartite(g)
        fields["bipartite"] = str(bip).lower()
        holds &= bip
    if args.girth:
        fields["girth"] = girth(g)
    _record(out, **fields)
    return OK if holds else NO


def cmd_verify(args, out: TextIO) -> int:
    from .verify import run_suite

    results = run_suite(max_n=args.max_n, seed=args.seed)
    for r in results:
        out.write(r.line() + "\n")
    return OK if all(r.passed for r in results) else NO


def cmd_graph(args, out: TextIO) -> int:
    return _emit_gadget(args, build_h_graph(), out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domcontract",
                                description="Domination and edge-contraction toolkit.")
    p.add_argument("--pretty", action="store_true", help="add a human-readable block")
    p.add_argument("--budget", type=int, default=None,
                   help="search-node budget (default: $GB_WORK_BUDGET, else unlimited)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("-i", "--input", default=None, help="edge-list file (default stdin)")
        return sp

    sp = with_input(sub.add_parser("gamma", help="domination number"))
    sp.add_argument("--method", default="bb", help="bb | bounded:<q> | treewidth[:<td-file>]")
    sp.set_defaults(func=cmd_gamma)

    sp = with_input(sub.add_parser("ct", help="contraction number"))
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(func=cmd_ct)

    sp = with_input(sub.add_parser("kec", help="k-Edge-Contraction decision"))
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--p5-fast", action="store_true", help="polynomial ladder for P5-free input")
    sp.add_argument("--validate", action="store_true", help="with --p5-fast, look for an induced P5")
    sp.set_defaults(func=cmd_kec)

    sp = with_input(sub.add_parser("ctbrute", help="brute-force contraction oracle"))
    sp.add_argument("--kmax", type=int, choices=(1, 2, 3), default=3)
    sp.set_defaults(func=cmd_ctbrute)

    sp = with_input(sub.add_parser("reduce", help="build a reduction instance"))
    sp.add_argument("kind", choices=("ct3", "ct2", "1ec"))
    sp.add_argument("-o", "--output", default=None)
    sp.add_argument("--labels", default=None, help="write the vertex-role sidecar here")
    sp.add_argument("--ell", type=int, default=None)
    sp.set_defaults(func=cmd_reduce)

    sp = with_input(sub.add_parser("transform", help="graph transformations"))
    sp.add_argument("kind", choices=("subdivide3", "contract"))
    sp.add_argument("-e", "--edge", default=None, help="edge u,v to contract")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_transform)

    sp = with_input(sub.add_parser("recognize", help="graph class membership"))
    sp.add_argument("--pt", type=int, default=None, help="test P_t-freeness")
    sp.add_argument("--2k2", dest="k2k2", action="store_true")
    sp.add_argument("--girth", action="store_true")
    sp.add_argument("--bipartite", action="store_true")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("verify", help="oracle cross-check suites")
    sp.add_argument("what", choices=("suite",))
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("graph", help="emit a fixed graph")
    sp.add_argument("name", choices=("h",))
    sp.add_argument("-o", "--output", default=None)
    sp.add_argument("--labels", default=None)
    sp.set_defaults(func=cmd_graph)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except WorkBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (GraphError, CnfError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
