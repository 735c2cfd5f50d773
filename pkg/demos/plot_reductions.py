"""
Reductions between domination problems
======================================

Three graph transforms and the extraction maps that come with them.
"""

from disjdom import (
    apx_gadget_transform,
    approx_disjunctive,
    approx_domination,
    canonical_gadget_set,
    domination_hardness_transform,
    exact_disjunctive,
    exact_domination,
    exact_two_domination,
    exact_vertex_cover,
    extract_dominating,
    extract_vertex_cover,
    gc_transform,
    gen_connected,
    is_bipartite,
    is_disjunctive_dominating,
    named_graph,
)

##############################################################################
# Pendants on every vertex
# ------------------------
#
# After hanging a pendant on each vertex, the disjunctive domination number
# equals the 2-domination number of the original graph.

g = gen_connected(7, 0.4, 3)
tr = gc_transform(g)
print("2-domination:", len(exact_two_domination(g)),
      "disjunctive on pendant graph:", len(exact_disjunctive(tr.h)))

##############################################################################
# Chains to a shared apex
# -----------------------
#
# Any disjunctive dominating set of the chain graph shrinks to a dominating
# set of the original that is no larger.

tr = domination_hardness_transform(g)
dd = approx_disjunctive(tr.h)
d = extract_dominating(g, tr, dd)
print(f"greedy on chain graph: {len(dd)}, extracted dominating set: {sorted(d)}",
      f"(optimum {len(exact_domination(g))})")
print("approx_domination with l=2:", sorted(approx_domination(g, 2)))

##############################################################################
# Edge gadgets
# ------------
#
# Every edge becomes a nine-vertex gadget. The result is bipartite with
# maximum degree three, and its optimum is the vertex cover number plus
# twice the edge count.

k4 = named_graph("K4")
tr = apx_gadget_transform(k4)
vc = exact_vertex_cover(k4)
print("gadget graph:", tr.h.n, "vertices, bipartite:", is_bipartite(tr.h),
      "max degree:", tr.h.max_degree)
canon = canonical_gadget_set(tr, vc)
print("cover plus gadget anchors:", len(canon), is_disjunctive_dominating(tr.h, canon))
print("optimum:", len(exact_disjunctive(tr.h)), "=", len(vc), "+ 2 *", k4.m)

# a greedy solution maps back to a cover at least 2m smaller
dd = approx_disjunctive(tr.h)
print("greedy:", len(dd), "-> cover", sorted(extract_vertex_cover(k4, tr, dd)))
print(tr.role_lines().splitlines()[4:8])
