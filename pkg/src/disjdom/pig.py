"""Minimum disjunctive dominating sets (b = 2) of proper interval graphs.

Both solvers sweep a bi-compatible elimination ordering once and keep the
invariant that every vertex already swept is disjunctively dominated. At
step ``i`` the vertex ``v`` is in one of three situations:

1. it has a solution vertex in its closed neighbourhood, or two at distance
   two: nothing to do;
2. nothing within distance two is chosen: add the furthest (last-positioned)
   member of ``N[v]``;
3. exactly one chosen vertex ``r`` lies at distance two: with ``j`` the last
   member of ``N[v]`` and ``k`` the last member of ``N[j]``, look at the
   vertices strictly between ``v`` and ``j``. If each of them is adjacent to
   ``k`` or at distance two from ``r``, add ``k``; otherwise add the last
   member of ``N[s]`` for the first such ``s`` that is neither.

"First" and "last" always refer to ordering positions and neighbourhoods are
closed, so the last member of ``N[v]`` may be ``v`` itself.

:func:`solve_pig_reference` evaluates these tests on an all-pairs distance
table (cubic time). :func:`solve_pig_linear` evaluates them with counters:
``d_count[v] = |N[v] & D|`` and, when ``v`` is undominated,
``d_count[first(N[v])] + d_count[last(N[v])] = |N2(v) & D|``, which runs in
O(n + m).
"""

from __future__ import annotations

import gc
from contextlib import contextmanager

from .errors import GraphInputError, NotBco, NotConnected
from .graph import DistanceOracle, Graph, is_connected
from .orderings import VertexOrdering, _local_bco, is_bco


def _extremes(adj, pos) -> tuple[list[int], list[int]]:
    """First- and last-positioned members of each closed neighbourhood."""
    lo = list(range(len(adj)))
    hi = list(range(len(adj)))
    for v, nbrs in enumerate(adj):
        plo = phi = pos[v]
        for u in nbrs:
            pu = pos[u]
            if pu < plo:
                plo, lo[v] = pu, u
            elif pu > phi:
                phi, hi[v] = pu, u
    return lo, hi


def _trivial(g: Graph, check_connected: bool = True) -> frozenset[int] | None:
    if g.n == 0:
        raise GraphInputError("graph has no vertices")
    if g.n == 1:
        return frozenset({0})
    if check_connected and not is_connected(g):
        raise NotConnected("graph is not connected")
    return None


def solve_pig_reference(g: Graph, ordering) -> frozenset[int]:
    """Sweep ``ordering`` using an all-pairs distance table, O(n^3)."""
    done = _trivial(g)
    if done is not None:
        return done
    if not isinstance(ordering, VertexOrdering):
        ordering = VertexOrdering.from_order(ordering)
    if len(ordering) != g.n or not is_bco(g, ordering):
        raise NotBco("ordering is not a bi-compatible elimination ordering")
    order, pos = ordering.order, ordering.position
    dist = DistanceOracle(g).matrix()
    n = g.n
    chosen: list[int] = []

    def last_closed(v):
        return max((u for u in range(n) if 0 <= dist[v][u] <= 1), key=pos.__getitem__)

    for i, v in enumerate(order):
        row = dist[v]
        if any(row[u] <= 1 for u in chosen):
            continue
        at_two = [u for u in chosen if row[u] == 2]
        if len(at_two) >= 2:
            continue
        j = last_closed(v)
        if not at_two:
            chosen.append(j)
            continue
        r = at_two[0]
        k = last_closed(j)
        between = order[i + 1:pos[j]]
        if all(dist[s][k] == 1 or dist[s][r] == 2 for s in between):
            chosen.append(k)
            continue
        for s in between:
            if dist[s][k] == 2 and (dist[s][r] > 2 or dist[s][r] < 0):
                chosen.append(last_closed(s))
                break
        else:
            raise AssertionError(f"no vertex qualifies at position {i}")
    return frozenset(chosen)


def solve_pig_linear(g: Graph, *, check_prefix: bool = False) -> frozenset[int]:
    """Minimum disjunctive dominating set of a proper interval graph in O(n + m).

    Computes its own BCO. With ``check_prefix`` every swept prefix is
    re-verified after each step (quadratic; for debugging).
    """
    # connectivity is checked by the first LexBFS sweep
    done = _trivial(g, check_connected=False)
    if done is not None:
        return done
    with _gc_paused():
        return _solve_linear(g, check_prefix)


@contextmanager
def _gc_paused():
    # the sweep allocates O(n) small lists and no reference cycles; with the
    # cyclic collector running, its full passes would also rescan every
    # unrelated live object in the process, which grows with heap size
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _solve_linear(g: Graph, check_prefix: bool) -> frozenset[int]:
    # work in the locally relabelled graph; map back at the end
    old_of, adj, order = _local_bco(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    lo, hi = _extremes(adj, pos)
    d_count = [0] * g.n
    # b_lists[v] holds N[v] & D
    b_lists: list[list[int]] = [[] for _ in range(g.n)]
    chosen: list[int] = []
    in_d = [False] * g.n

    def add(x):
        assert not in_d[x], f"vertex {x} chosen twice"
        in_d[x] = True
        chosen.append(x)
        d_count[x] += 1
        b_lists[x].append(x)
        for u in adj[x]:
            d_count[u] += 1
            b_lists[u].append(x)

    for i, v in enumerate(order):
        if d_count[v] == 0:
            first, last = lo[v], hi[v]
            at_two = d_count[first] + d_count[last]
            if at_two == 0:
                add(last)
            elif at_two == 1:
                left = b_lists[first]
                assert len(left) == 1, "the lone distance-two vertex must precede v"
                r = left[0]
                k = hi[last]
                k_first = pos[lo[k]]
                r_last = pos[hi[r]]
                for s_pos in range(i + 1, pos[last]):
                    s = order[s_pos]
                    # s not adjacent to k, and no common neighbour with r
                    if s_pos < k_first and r_last < pos[lo[s]]:
                        add(hi[s])
                        break
                else:
                    add(k)
        if check_prefix:
            _assert_prefix(adj, order[:i + 1], chosen)
    return frozenset(old_of[v] for v in chosen)


def _assert_prefix(adj, prefix, chosen) -> None:
    members = set(chosen)
    for v in prefix:
        if v in members or not members.isdisjoint(adj[v]):
            continue
        second = set()
        for u in adj[v]:
            second.update(adj[u])
        second -= set(adj[v])
        second.discard(v)
        assert len(second & members) >= 2, f"vertex {v} left undominated"

