from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from disjdom import Graph, named_graph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        # a random spanning path keeps the graph connected
        perm = draw(st.permutations(range(n)))
        edges = sorted({*edges, *((min(a, b), max(a, b)) for a, b in zip(perm, perm[1:]))})
    return Graph.from_edges(n, edges)


@pytest.fixture
def G():
    return named_graph


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
