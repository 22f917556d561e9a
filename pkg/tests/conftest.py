from __future__ import annotations

import pytest
from hypothesis import strategies as st

from twowalk.analysis import find_2k2
from twowalk.generators import fixed_graph
from twowalk.graph import Graph

# criterion id -> test function name in test_acceptance.py
CRITERIA = {
    "A1": ("test_a1_exhaustive_small_graphs", "all 2-tough 2K2-free graphs on n<=7 get a verified 2-walk"),
    "A2": ("test_a2_constructive_path_coverage", "500 filtered 2-tough instances take the constructive path"),
    "A3": ("test_a3_certificate_soundness", "200 Hall failures give sound certificates, toughness < 2"),
    "A4": ("test_a4_edge_component_equivalence", "2K2-free iff at most one edge-bearing component of G - a for all a, n<=6"),
    "A5": ("test_a5_generator_guarantees", "1000 co-chordal + 1000 split outputs are 2K2-free"),
    "A6": ("test_a6_euler_invariant", "Euler circuits visit v deg/2 times, use each occurrence once"),
    "A7": ("test_a7_worked_traces", "G1/G2 traces byte-identical to golden files"),
    "A8": ("test_a8_performance_guard", "walk on split 1500+250 finishes under 5 s"),
}

_outcomes: dict[str, tuple[str, str]] = {}


def pytest_sessionstart(session):
    for name in ("G1", "G2"):
        witness = find_2k2(fixed_graph(name))
        if witness is not None:
            raise pytest.UsageError(f"fixed graph {name} contains an induced 2K2 {witness}")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    func = report.nodeid.rsplit("::", 1)[-1]
    if report.when == "call" or report.outcome != "passed":
        detail = dict(report.user_properties).get("detail", "")
        prev = _outcomes.get(func)
        if prev is None or prev[0] == "PASS":
            _outcomes[func] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for cid, (func, text) in CRITERIA.items():
        status, detail = _outcomes.get(func, ("NOT RUN", ""))
        line = f"{cid} {status}: {text}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)


def graph_from(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


def star(leaves: int = 3) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)
