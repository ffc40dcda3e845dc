from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from statuspairs.graph import Graph
from statuspairs.prufer import prufer_to_tree

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@st.composite
def trees(draw, min_order: int = 2, max_order: int = 40) -> Graph:
    n = draw(st.integers(min_order, max_order))
    if n == 2:
        return Graph.path(2)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(seq, n)


@st.composite
def connected_graphs(draw, max_order: int = 9) -> Graph:
    tree = draw(trees(2, max_order))
    n = tree.n
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    g = tree
    for u, v in extra:
        if u != v and not g.has_edge(u, v):
            g = g.add_edge(u, v)
    return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20190305)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
