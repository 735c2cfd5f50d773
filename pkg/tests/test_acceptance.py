"""Acceptance gate: ten end-to-end criteria at their stated tolerances.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
appears in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import io
import sys
import time
from contextlib import redirect_stdout
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from disjdom import (  # noqa: E402
    Graph,
    SearchConfig,
    apx_gadget_transform,
    approx_disjunctive,
    approx_domination,
    build_cmsmc,
    compute_bco,
    diameter,
    domination_hardness_transform,
    exact_disjunctive,
    exact_domination,
    exact_two_domination,
    exact_vertex_cover,
    extract_dominating,
    gc_transform,
    gen_connected,
    gen_cubic,
    gen_proper_interval,
    gen_tree,
    is_bipartite,
    is_connected,
    is_disjunctive_dominating,
    is_dominating,
    named_graph,
    parse_graph,
    ratio_bound,
    serialize_graph,
    solve_pig_linear,
    solve_pig_reference,
)
from disjdom.cli import run  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
EXHAUSTIVE = SearchConfig(strategy="exhaustive")


def _atlas(max_n=7):
    """Every graph on 0..max_n vertices, one per isomorphism class."""
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= max_n:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


def criterion_1():
    start = time.perf_counter()
    bad = []
    count = 0
    for seed in range(240):
        n = 2 + seed % 11
        span = [0.5, 1.5, 3.0, 6.0][seed % 4]
        g = gen_proper_interval(n, seed, span)
        opt = len(exact_disjunctive(g, cfg=EXHAUSTIVE))
        fast = solve_pig_linear(g)
        slow = solve_pig_reference(g, compute_bco(g))
        count += 1
        if not len(fast) == len(slow) == opt:
            bad.append((n, seed, len(fast), len(slow), opt))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"{count} graphs, {len(bad)} mismatches, {elapsed:.1f} s (limit 60 s)"


def _time_pig(n, seed, repeats=5):
    g = gen_proper_interval(n, seed)
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        d = solve_pig_linear(g)
        times.append(time.perf_counter() - start)
    return g, d, times


def criterion_2():
    _, _, small = _time_pig(10**4, 1)
    g, d, large = _time_pig(10**5, 1)
    valid = is_disjunctive_dominating(g, d, 2)
    ratio = min(large) / min(small)
    ok = valid and max(large) < 5 and ratio <= 15
    return ok, (f"n=1e5 m={g.m}: worst {max(large):.2f} s (limit 5 s), valid={valid}; "
                f"best-of-5 ratio 1e5/1e4 = {ratio:.1f} (limit 15)")


def criterion_3():
    violations = invalid = 0
    worst = 0.0
    count = 0
    for seed in range(520):
        n = 2 + seed % 11
        p = [0.2, 0.35, 0.5, 0.7][seed % 4]
        g = gen_connected(n, p, seed)
        approx = approx_disjunctive(g)
        opt = len(exact_disjunctive(g))
        count += 1
        if not is_disjunctive_dominating(g, approx):
            invalid += 1
        if len(approx) > ratio_bound(g.max_degree) * opt:
            violations += 1
        worst = max(worst, len(approx) / opt)
    ok = violations == 0 and invalid == 0
    return ok, f"{count} graphs, {invalid} invalid, {violations} violations, worst ratio {worst:.2f}"


def criterion_4():
    graphs = mismatches = checks = 0
    for g in _atlas(7):
        if g.n == 0 or not is_connected(g):
            continue
        inst = build_cmsmc(g, 2)
        graphs += 1
        for k in range(g.n + 1):
            for combo in combinations(range(g.n), k):
                checks += 1
                if inst.is_cover(combo) != is_disjunctive_dominating(g, combo, 2):
                    mismatches += 1
    return mismatches == 0, (f"{graphs} connected graphs (all classes, n<=7), "
                             f"{checks} subsets, {mismatches} mismatches")


def criterion_5():
    bad = 0
    count = 0
    for seed in range(110):
        g = gen_connected(2 + seed % 7, [0.3, 0.5, 0.7][seed % 3], seed)
        count += 1
        if len(exact_disjunctive(gc_transform(g).h)) != len(exact_two_domination(g)):
            bad += 1
    return bad == 0, f"{count} graphs n<=8, {bad} mismatches"


def criterion_6():
    sandwich = extract = approx = 0
    count = 0
    for seed in range(110):
        g = gen_connected(1 + seed % 7, [0.3, 0.5, 0.7][seed % 3], seed)
        tr = domination_hardness_transform(g)
        gamma = len(exact_domination(g))
        opt = exact_disjunctive(tr.h)
        count += 1
        if len(opt) > gamma + 1:
            sandwich += 1
        for dd in (opt, approx_disjunctive(tr.h)):
            d = extract_dominating(g, tr, dd)
            if not is_dominating(g, d) or len(d) > len(dd):
                extract += 1
        for l in (1, 2, 3):
            if not is_dominating(g, approx_domination(g, l)):
                approx += 1
    ok = sandwich == extract == approx == 0
    return ok, (f"{count} graphs n<=7: {sandwich} sandwich, {extract} extraction, "
                f"{approx} approx-domination failures")


def _seeded_min_degree_two(count=12):
    found = []
    seed = 0
    while len(found) < count:
        g = gen_connected(3 + seed % 3, 0.7, seed)
        seed += 1
        if g.min_degree >= 2 and g.m <= 5 and g not in found:
            found.append(g)
    return found


def criterion_7():
    cases = [("C3", named_graph("C3")), ("C4", named_graph("C4")), ("K4", named_graph("K4"))]
    cases += [(f"seeded {serialize_graph(g).splitlines()[1:]}", g) for g in _seeded_min_degree_two()]
    # a second 3-regular input for the 7 * VC bound (87-vertex gadget graph)
    cases.append(("cubic n=6", gen_cubic(6, 1)))
    failures = []
    cfg = SearchConfig(node_budget=10**7)
    for label, g in cases:
        tr = apx_gadget_transform(g)
        vc = len(exact_vertex_cover(g))
        gamma = len(exact_disjunctive(tr.h, cfg=cfg))
        if gamma != vc + 2 * g.m:
            failures.append(f"{label}: {gamma} != {vc}+2*{g.m}")
        if not is_bipartite(tr.h) or tr.h.max_degree > max(3, g.max_degree):
            failures.append(f"{label}: shape")
        if all(g.degree(v) == 3 for v in range(g.n)) and gamma > 7 * vc:
            failures.append(f"{label}: {gamma} > 7*{vc}")
    return not failures, f"{len(cases)} instances, failures: {failures or 'none'}"


def _observations(g):
    size = len(exact_disjunctive(g))
    universal = g.n > 0 and g.max_degree == g.n - 1
    ok = (size == 1) == universal or g.n == 0
    if g.n and diameter(g) <= 2:
        ok = ok and size <= 2
    return ok


def criterion_8():
    atlas = list(_atlas(7))
    bad = sum(not _observations(g) for g in atlas)
    sampled = 0
    for seed in range(1200):
        n = 1 + seed % 7
        rng_g = gen_connected(n, [0.3, 0.5, 0.8][seed % 3], seed)
        sampled += 1
        bad += not _observations(rng_g)
    return bad == 0, f"{len(atlas)} graphs (all classes, n<=7) + {sampled} seeded samples, {bad} violations"


def criterion_9():
    bad = 0
    count = 0
    for seed in range(220):
        t = gen_tree(1 + seed % 14, seed)
        count += 1
        if len(exact_domination(t)) > 2 * len(exact_disjunctive(t)) - 1:
            bad += 1
    return bad == 0, f"{count} trees n<=14, {bad} violations"


def criterion_10():
    files = sorted(FIXTURES.glob("*.graph"))
    bad = []
    for path in files:
        text = path.read_text()
        g = parse_graph(text)
        if serialize_graph(g) != text or parse_graph(serialize_graph(g)) != g:
            bad.append(path.name)
    # the same through the command line: generated edge lists re-parse byte-exact
    for argv in (["generate", "--family", "proper_interval", "--n", "40", "--seed", "3"],
                 ["generate", "--family", "cubic", "--n", "10", "--seed", "5"],
                 ["transform", "apx", str(FIXTURES / "k4.graph")]):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = run(argv + ["--porcelain"])
            outs.append(buf.getvalue())
        if code != 0 or outs[0] != outs[1] or serialize_graph(parse_graph(outs[0])) != outs[0]:
            bad.append(" ".join(argv))
    return not bad, f"{len(files)} fixtures + 3 command-line outputs, failures: {bad or 'none'}"


CRITERIA = {
    1: ("PIG optimality", criterion_1),
    2: ("PIG linear scaling", criterion_2),
    3: ("greedy ratio", criterion_3),
    4: ("multicover correspondence", criterion_4),
    5: ("pendant-graph equivalence", criterion_5),
    6: ("hardness transform", criterion_6),
    7: ("gadget transform", criterion_7),
    8: ("small-graph observations", criterion_8),
    9: ("tree bound", criterion_9),
    10: ("edge-list round trip", criterion_10),
}


def _line(number, ok, detail):
    name = CRITERIA[number][0]
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} {name} -- {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import ACCEPTANCE
    try:
        ok, detail = CRITERIA[number][1]()
    except Exception as exc:  # recorded as a failure line, then re-raised
        ACCEPTANCE.append(_line(number, False, f"raised {exc!r}"))
        raise
    line = _line(number, ok, detail)
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = []
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number][1]()
        results.append(ok)
        print(_line(number, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
