import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from disjdom import (
    BudgetExceeded,
    Graph,
    GraphInputError,
    SearchConfig,
    diameter,
    dominating_set_at_most,
    exact_disjunctive,
    exact_domination,
    exact_two_domination,
    exact_vertex_cover,
    gen_connected,
    is_disjunctive_dominating,
    named_graph,
)
from disjdom.exact import cover_requirements
from oracles import gamma_2dom, gamma_ddp, gamma_dom, vertex_cover_number

EXHAUSTIVE = SearchConfig(strategy="exhaustive")
CANONICAL = SearchConfig(canonical=True)


def test_examples():
    assert len(exact_disjunctive(named_graph("K1,3"))) == 1
    assert len(exact_disjunctive(named_graph("P4"))) == 2
    assert len(exact_disjunctive(named_graph("C4"))) == 2
    assert len(exact_domination(named_graph("P4"))) == 2
    assert len(exact_two_domination(named_graph("C4"))) == 2
    assert len(exact_vertex_cover(named_graph("K4"))) == 3


def test_exhaustive_returns_lexicographically_least():
    assert exact_disjunctive(named_graph("P4"), cfg=EXHAUSTIVE) == {0, 2}
    assert exact_domination(named_graph("C6"), EXHAUSTIVE) == {0, 3}
    assert exact_vertex_cover(named_graph("P4"), EXHAUSTIVE) == {0, 2}
    assert exact_domination(named_graph("C5"), CANONICAL) == {0, 2}


def test_b_parameter():
    # b = 1 is distance-two domination; large b leaves only closed domination
    p7 = named_graph("P7")
    assert len(exact_disjunctive(p7, 1)) == 2
    assert len(exact_disjunctive(p7, 9)) == len(exact_domination(p7)) == 3
    assert len(exact_disjunctive(p7, cfg=SearchConfig(b=3))) == 3


def test_empty_and_disconnected():
    assert exact_disjunctive(Graph.from_edges(0, [])) == frozenset()
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert len(exact_disjunctive(g)) == 3
    assert exact_disjunctive(g, cfg=EXHAUSTIVE) == {0, 2, 4}
    assert exact_vertex_cover(g) in ({0, 2}, {0, 3}, {1, 2}, {1, 3})


def test_budget():
    g = gen_connected(30, 0.1, 1)
    with pytest.raises(BudgetExceeded) as info:
        exact_disjunctive(g, cfg=SearchConfig(node_budget=5))
    assert info.value.budget == 5


def test_config_validation():
    with pytest.raises(GraphInputError):
        SearchConfig(strategy="magic")
    with pytest.raises(GraphInputError):
        SearchConfig(node_budget=0)
    with pytest.raises(GraphInputError):
        exact_disjunctive(named_graph("P3"), 0)


def test_dominating_set_at_most():
    c5 = named_graph("C5")
    assert dominating_set_at_most(c5, 1) is None
    assert len(dominating_set_at_most(c5, 2)) == 2


def test_cover_requirements():
    reqs = cover_requirements(named_graph("P5"), {0, 4})
    assert [r.satisfied for r in reqs] == [True, True, True, True, True]
    reqs = cover_requirements(named_graph("P5"), {0})
    assert [(r.satisfied, r.credit, r.missing) for r in reqs] == [
        (True, 0, 0), (True, 0, 0), (False, 1, 1), (False, 0, 2), (False, 0, 2)]


@settings(max_examples=200)
@given(graphs(max_n=10), st.integers(1, 3))
def test_branch_and_bound_matches_exhaustive(g, b):
    bnb = exact_disjunctive(g, b)
    ex = exact_disjunctive(g, b, EXHAUSTIVE)
    assert len(bnb) == len(ex)
    assert is_disjunctive_dominating(g, bnb, b)
    assert len(exact_domination(g)) == len(exact_domination(g, EXHAUSTIVE))
    assert len(exact_two_domination(g)) == len(exact_two_domination(g, EXHAUSTIVE))
    assert len(exact_vertex_cover(g)) == len(exact_vertex_cover(g, EXHAUSTIVE))


@given(graphs(max_n=8))
def test_matches_independent_oracle(g):
    assert len(exact_disjunctive(g)) == gamma_ddp(g)
    assert len(exact_domination(g)) == gamma_dom(g)
    assert len(exact_two_domination(g)) == gamma_2dom(g)
    assert len(exact_vertex_cover(g)) == vertex_cover_number(g)


@given(graphs(min_n=1, max_n=9, connected=True))
def test_universal_vertex_and_small_diameter(g):
    size = len(exact_disjunctive(g))
    assert (size == 1) == (g.max_degree == g.n - 1)
    if diameter(g) <= 2:
        assert size <= 2


@given(graphs(max_n=9), st.integers(1, 3))
def test_b_hierarchy_of_optima(g, b):
    assert len(exact_disjunctive(g, b)) <= len(exact_disjunctive(g, b + 1))


@given(graphs(max_n=10), st.integers(1, 3))
def test_canonical_matches_exhaustive_exactly(g, b):
    assert exact_disjunctive(g, b, CANONICAL) == exact_disjunctive(g, b, EXHAUSTIVE)
    assert exact_domination(g, CANONICAL) == exact_domination(g, EXHAUSTIVE)
    assert exact_two_domination(g, CANONICAL) == exact_two_domination(g, EXHAUSTIVE)
    assert exact_vertex_cover(g, CANONICAL) == exact_vertex_cover(g, EXHAUSTIVE)
