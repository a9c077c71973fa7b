import io

import pytest

from domcontract.cli import BAD_INPUT, BUDGET, NO, OK, USAGE, main
from domcontract.graph import format_edge_list, parse_edge_list, path_graph, star_graph
from domcontract.reductions import CnfInstance
from domcontract.treewidth import format_td, heuristic_tree_decomposition


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def record(text):
    return dict(tok.split("=", 1) for tok in text.splitlines()[0].split())


@pytest.fixture
def h_text():
    _, text = run(["graph", "h"])
    return text


def test_graph_h_then_gamma_and_ct(h_text, monkeypatch):
    code, out = run(["gamma"], h_text, monkeypatch)
    assert code == OK and record(out)["gamma"] == "3"
    code, out = run(["ct", "--witness"], h_text, monkeypatch)
    rec = record(out)
    assert code == OK and rec["ct"] == "2" and rec["basis"] and rec["witness"] != "-"


def test_gamma_star_from_file(tmp_path):
    f = tmp_path / "k15.el"
    f.write_text(format_edge_list(star_graph(5)))
    code, out = run(["gamma", "-i", str(f)])
    assert code == OK and record(out) == {"gamma": "1", "method": "bb", "witness": "0"}
    code, out = run(["ct", "-i", str(f)])
    assert record(out)["ct"] == "undefined"


def test_gamma_methods(h_text, monkeypatch, tmp_path):
    code, out = run(["gamma", "--method", "bounded:2"], h_text, monkeypatch)
    assert code == NO and record(out)["gamma"] == ">2"
    code, out = run(["gamma", "--method", "bounded:3"], h_text, monkeypatch)
    assert code == OK and record(out)["gamma"] == "3"
    code, out = run(["gamma", "--method", "treewidth"], h_text, monkeypatch)
    assert record(out)["gamma"] == "3"
    g = parse_edge_list(h_text)
    td = tmp_path / "h.td"
    td.write_text(format_td(heuristic_tree_decomposition(g), g.n))
    code, out = run(["gamma", "--method", f"treewidth:{td}"], h_text, monkeypatch)
    assert code == OK and record(out)["gamma"] == "3"
    code, _ = run(["gamma", "--method", "magic"], h_text, monkeypatch)
    assert code == USAGE


def test_kec(h_text, monkeypatch):
    assert run(["kec", "-k", "1"], h_text, monkeypatch)[0] == NO
    assert run(["kec", "-k", "2"], h_text, monkeypatch)[0] == OK
    assert run(["kec", "-k", "4"], h_text, monkeypatch)[0] == USAGE
    p4 = format_edge_list(path_graph(4))
    code, out = run(["kec", "-k", "1", "--p5-fast"], p4, monkeypatch)
    assert code == OK and record(out)["method"] == "p5"
    assert run(["kec", "-k", "3", "--p5-fast"], p4, monkeypatch)[0] == USAGE


def test_ctbrute(h_text, monkeypatch):
    code, out = run(["ctbrute", "--kmax", "2"], h_text, monkeypatch)
    assert code == OK and record(out)["ct"] == "2"
    code, out = run(["ctbrute", "--kmax", "1"], h_text, monkeypatch)
    assert code == NO and record(out)["ct"] == "none"


def test_reduce_and_transform(monkeypatch, tmp_path):
    cnf = CnfInstance.of(3, [(1, 2, 3)]).to_dimacs()
    out_file, labels = tmp_path / "g.el", tmp_path / "g.labels"
    code, _ = run(["reduce", "ct3", "-o", str(out_file), "--labels", str(labels)], cnf, monkeypatch)
    assert code == OK
    assert parse_edge_list(out_file.read_text()).n == 27
    assert "T[1]" in labels.read_text()
    p3 = format_edge_list(path_graph(3))
    code, out = run(["reduce", "1ec", "--ell", "1"], p3, monkeypatch)
    assert code == OK and parse_edge_list(out).n == 9
    assert run(["reduce", "1ec"], p3, monkeypatch)[0] == USAGE
    code, out = run(["transform", "subdivide3"], p3, monkeypatch)
    assert parse_edge_list(out).n == 3 + 2 * 3
    code, out = run(["transform", "contract", "-e", "0,1"], p3, monkeypatch)
    assert parse_edge_list(out).n == 2
    assert run(["transform", "contract", "-e", "0,2"], p3, monkeypatch)[0] == BAD_INPUT
    assert run(["transform", "contract", "-e", "zero"], p3, monkeypatch)[0] == USAGE


def test_recognize(monkeypatch):
    p5 = format_edge_list(path_graph(5))
    code, out = run(["recognize", "--pt", "5"], p5, monkeypatch)
    assert code == NO and record(out)["p5_free"] == "false"
    code, out = run(["recognize", "--bipartite", "--girth"], p5, monkeypatch)
    assert code == OK and record(out)["girth"] == "inf"
    code, out = run(["recognize"], p5, monkeypatch)
    assert code == OK and record(out)["longest_induced_path"] == "5"


def test_error_codes(monkeypatch, h_text):
    assert run(["gamma"], "2 1\n0 0\n", monkeypatch)[0] == BAD_INPUT
    assert run(["gamma", "-i", "/nonexistent/file"])[0] == BAD_INPUT
    assert run(["frobnicate"])[0] == USAGE
    assert run(["--budget", "3", "gamma"], h_text, monkeypatch)[0] == BUDGET
    monkeypatch.setenv("GB_WORK_BUDGET", "3")
    assert run(["gamma"], h_text, monkeypatch)[0] == BUDGET
    monkeypatch.setenv("GB_WORK_BUDGET", "lots")
    assert run(["gamma"], h_text, monkeypatch)[0] == USAGE


def test_pretty(h_text, monkeypatch):
    _, out = run(["--pretty", "ct"], h_text, monkeypatch)
    assert len(out.splitlines()) > 1 and out.splitlines()[1].startswith("  ")


def test_deterministic_output(h_text, monkeypatch):
    first = run(["ct", "--witness"], h_text, monkeypatch)
    second = run(["ct", "--witness"], h_text, monkeypatch)
    assert first == second
    assert run(["graph", "h"]) == run(["graph", "h"])


def test_verify_suite_small():
    code, out = run(["verify", "suite", "--max-n", "5", "--seed", "1"])
    assert code == OK
    lines = out.splitlines()
    assert len(lines) == 10 and all(line.startswith("PASS") for line in lines)


def test_verify_suite_default_scale_exits_zero():
    code, out = run(["verify", "suite", "--max-n", "8"])
    assert code == OK, out
