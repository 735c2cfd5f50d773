"""
Exact search and small-graph facts
==================================

The exact solvers are the ground truth for everything else. This walks
through the two strategies and checks a few facts on small graphs.
"""

import time

from disjdom import (
    BudgetExceeded,
    SearchConfig,
    diameter,
    exact_disjunctive,
    exact_domination,
    gen_connected,
    gen_tree,
)

##############################################################################
# Two strategies
# --------------
#
# Exhaustive search walks subsets by size. Branch and bound picks the most
# constrained vertex and prunes with a packing bound. ``canonical=True``
# makes it return the same lexicographically least set as exhaustive search.

g = gen_connected(14, 0.2, 2)
for cfg in (SearchConfig(strategy="exhaustive"), SearchConfig(), SearchConfig(canonical=True)):
    start = time.perf_counter()
    d = exact_disjunctive(g, cfg=cfg)
    print(f"{cfg.strategy:<16} canonical={cfg.canonical!s:<5} {sorted(d)} "
          f"{(time.perf_counter() - start) * 1000:.1f} ms")

##############################################################################
# A node budget stops runaway searches.

try:
    exact_disjunctive(gen_connected(60, 0.05, 1), cfg=SearchConfig(node_budget=1000))
except BudgetExceeded as exc:
    print("stopped after", exc.budget, "nodes")

##############################################################################
# Facts worth checking
# --------------------
#
# One vertex suffices exactly when some vertex sees everyone, and diameter
# two never needs more than two.

for seed in range(8):
    h = gen_connected(7, 0.5, seed)
    size = len(exact_disjunctive(h))
    print(f"seed {seed}: size {size}, max degree {h.max_degree}, diameter {diameter(h)}")

# on trees, domination never exceeds twice the disjunctive number minus one
for seed in range(5):
    t = gen_tree(14, seed)
    print(f"tree {seed}: domination {len(exact_domination(t))}, "
          f"disjunctive {len(exact_disjunctive(t))}")
