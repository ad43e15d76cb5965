import pytest
from hypothesis import strategies as st

from posetao.poset import Poset, SimpleGraph, from_cover_relations


@st.composite
def posets(draw, max_n=8):
    """Random posets: a natural labelling closed transitively, then shuffled."""
    n = draw(st.integers(0, max_n))
    pairs = [(j, i) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    P = from_cover_relations(n, chosen)
    perm = draw(st.permutations(range(n)))
    return P.relabel(list(perm))


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, edges)


def diamond() -> Poset:
    # 0 bottom, 1 and 2 middle, 3 top
    return from_cover_relations(4, [(1, 0), (2, 0), (3, 1), (3, 2)])


@pytest.fixture
def diamond_poset():
    return diamond()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
