import math
from itertools import combinations
from types import MappingProxyType

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from disjdom import (
    GraphInputError,
    MulticoverInstance,
    Uncoverable,
    approx_disjunctive,
    build_cmsmc,
    exact_disjunctive,
    greedy_multicover,
    is_disjunctive_dominating,
    named_graph,
    ratio_bound,
)


def test_k2_instance():
    inst = build_cmsmc(named_graph("K2"))
    assert [dict(f) for f in inst.family] == [{0: 2, 1: 2}, {0: 2, 1: 2}]
    assert dict(inst.requirement) == {0: 2, 1: 2}


def test_p3_instance():
    inst = build_cmsmc(named_graph("P3"))
    assert [dict(f) for f in inst.family] == [
        {0: 2, 1: 2, 2: 1}, {0: 2, 1: 2, 2: 2}, {0: 1, 1: 2, 2: 2}]


def test_dump_format():
    assert build_cmsmc(named_graph("K2")).dump() == "0 2\n1 2\nset 0: 0:2 1:2\nset 1: 0:2 1:2\n"


def test_greedy_picks():
    assert greedy_multicover(build_cmsmc(named_graph("P4"))) == [1, 2]
    assert greedy_multicover(build_cmsmc(named_graph("K2"))) == [0]
    assert greedy_multicover(build_cmsmc(named_graph("K1,3"))) == [0]


def test_approx_examples():
    assert approx_disjunctive(named_graph("P4")) == {1, 2}
    assert 2 <= ratio_bound(2) * 2
    assert ratio_bound(2) == pytest.approx(math.log(8) + 1)
    assert approx_disjunctive(named_graph("K2")) == {0}


def test_invalid_b():
    with pytest.raises(GraphInputError):
        build_cmsmc(named_graph("P3"), 0)


def test_uncoverable():
    inst = MulticoverInstance(
        ground=(0,),
        requirement=MappingProxyType({0: 3}),
        family=(MappingProxyType({0: 1}), MappingProxyType({0: 1})),
        origin=(0, 1),
    )
    with pytest.raises(Uncoverable):
        greedy_multicover(inst)


@given(graphs(max_n=12), st.integers(1, 3))
def test_multiset_sizes_bounded(g, b):
    inst = build_cmsmc(g, b)
    d = g.max_degree if g.n else 0
    for i in range(g.n):
        if b == 2:
            assert inst.size_of(i) <= d * d + d + 2
        assert inst.family[i][i] == b


@given(graphs(max_n=7), st.integers(1, 3))
def test_cover_iff_dominating(g, b):
    inst = build_cmsmc(g, b)
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            assert inst.is_cover(combo) == is_disjunctive_dominating(g, combo, b)


def _greedy_naive(inst):
    residual = dict(inst.requirement)
    left = set(range(len(inst.family)))
    chosen = []
    while any(residual.values()):
        gains = {i: sum(min(m, residual[x]) for x, m in inst.family[i].items()) for i in left}
        i = max(sorted(gains), key=lambda j: gains[j])
        assert gains[i] > 0
        chosen.append(i)
        left.discard(i)
        for x, m in inst.family[i].items():
            residual[x] -= min(m, residual[x])
    return chosen


@given(graphs(max_n=12), st.integers(1, 3))
def test_lazy_heap_matches_naive_greedy(g, b):
    inst = build_cmsmc(g, b)
    picks = greedy_multicover(inst)
    assert picks == _greedy_naive(inst)
    assert len(picks) == len(set(picks)) <= g.n
    assert is_disjunctive_dominating(g, picks, b)


@given(graphs(max_n=10, connected=True))
def test_ratio_holds(g):
    approx = approx_disjunctive(g)
    opt = len(exact_disjunctive(g))
    assert is_disjunctive_dominating(g, approx)
    assert len(approx) <= ratio_bound(g.max_degree) * opt
