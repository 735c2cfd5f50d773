"""Disjunctive domination on undirected graphs.

A set ``D`` is b-disjunctive dominating when every vertex outside ``D`` has a
neighbour in ``D`` or at least ``b`` members of ``D`` at distance exactly two.
"""

import types as _types

from .errors import (
    BudgetExceeded,
    DisjdomError,
    GraphInputError,
    InvalidCertificate,
    MinDegreeTooLow,
    NotBco,
    NotConnected,
    NotProperInterval,
    ParseError,
    Uncoverable,
)
from .exact import (
    SearchConfig,
    dominating_set_at_most,
    exact_disjunctive,
    exact_domination,
    exact_two_domination,
    exact_vertex_cover,
)
from .generators import (
    GenSpec,
    SplitMix64,
    gen_connected,
    gen_cubic,
    gen_proper_interval,
    gen_tree,
    generate,
    named_graph,
)
from .graph import (
    DistanceOracle,
    Graph,
    Problem,
    Solution,
    bfs_distances,
    connected_components,
    diameter,
    is_bipartite,
    is_connected,
    is_disjunctive_dominating,
    is_dominating,
    is_two_dominating,
    is_vertex_cover,
    neighbors_closed,
    parse_graph,
    second_neighborhood,
    serialize_graph,
    verify,
)
from .greedy import (
    MulticoverInstance,
    approx_disjunctive,
    build_cmsmc,
    greedy_multicover,
    ratio_bound,
)
from .orderings import VertexOrdering, compute_bco, is_bco, is_peo, lex_bfs
from .pig import solve_pig_linear, solve_pig_reference
from .reductions import (
    Role,
    TransformResult,
    apx_gadget_transform,
    approx_domination,
    canonical_gadget_set,
    domination_hardness_transform,
    extract_dominating,
    extract_vertex_cover,
    gc_transform,
)

__version__ = "0.1.0"

__all__ = [name for name, obj in globals().items()
           if not name.startswith("_") and not isinstance(obj, _types.ModuleType)]
