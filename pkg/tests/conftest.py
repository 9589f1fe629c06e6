import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from doublegraph.graph import Graph, graph_from_edge_list
from doublegraph.harness.corpus import named_fixture

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_p=1, max_p=7, connected=False):
    p = draw(st.integers(min_p, max_p))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the draw connected
        order = draw(st.permutations(range(p)))
        for i in range(1, p):
            parent = order[draw(st.integers(0, i - 1))]
            e = tuple(sorted((order[i], parent)))
            if e not in chosen:
                chosen.append(e)
    return graph_from_edge_list(p, chosen)


def path(k: int) -> Graph:
    return named_fixture(f"path_{k}")


def cycle(k: int) -> Graph:
    return named_fixture(f"cycle_{k}")


def star(k: int) -> Graph:
    return named_fixture(f"star_{k}")


def complete(k: int) -> Graph:
    return named_fixture(f"complete_{k}")


@pytest.fixture
def fig2() -> Graph:
    return named_fixture("fig2")


@pytest.fixture
def fig3() -> Graph:
    return named_fixture("fig3")


@pytest.fixture
def fig4() -> Graph:
    return named_fixture("fig4")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
