import pytest
from hypothesis import strategies as st

from domcontract.graph import Graph
from domcontract.reductions import build_h_graph


@pytest.fixture(scope="session")
def h_gadget():
    return build_h_graph()


@pytest.fixture(scope="session")
def h(h_gadget):
    return h_gadget.graph


def h_ids(gadget, *numbers):
    """0-based ids of H's vertices given by their 1-based names."""
    return sorted(gadget.vertex(f"H:{i}") for i in numbers)


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=True):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
        edges.update(extra)
    return Graph.from_edges(n, sorted(edges))


# criterion lines recorded by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])
