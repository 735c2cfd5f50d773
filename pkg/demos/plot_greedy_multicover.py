"""
Greedy multicover on general graphs
===================================

Turns a graph into a multiset multicover instance and runs the greedy on it.
"""

from disjdom import (
    approx_disjunctive,
    build_cmsmc,
    exact_disjunctive,
    gen_connected,
    greedy_multicover,
    named_graph,
    ratio_bound,
)

##############################################################################
# Each vertex becomes a multiset: two copies of every closed neighbour, one
# copy of every vertex two hops away. Every vertex must be covered twice.

inst = build_cmsmc(named_graph("P4"))
print(inst.dump())

# benefits start at 5, 7, 7, 5; vertex 1 wins the tie, then vertex 2 finishes
print("picked:", greedy_multicover(inst))

##############################################################################
# How far from optimal?
# ---------------------

worst = 0.0
for seed in range(60):
    g = gen_connected(10, 0.3, seed)
    approx = len(approx_disjunctive(g))
    opt = len(exact_disjunctive(g))
    worst = max(worst, approx / opt)
    if seed < 5:
        print(f"seed {seed}: greedy {approx}, optimum {opt}, "
              f"guarantee {ratio_bound(g.max_degree):.2f}")
print(f"worst observed ratio over 60 graphs: {worst:.2f}")

##############################################################################
# The same greedy handles other thresholds at distance two.

g = gen_connected(12, 0.25, 7)
for b in (1, 2, 3):
    print(f"b={b}: greedy {len(approx_disjunctive(g, b))}, optimum {len(exact_disjunctive(g, b))}")
