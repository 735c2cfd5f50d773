"""Perfect and bi-compatible elimination orderings.

A bi-compatible elimination ordering (BCO) is a perfect elimination ordering
whose reverse is also one; a graph has one exactly when it is a proper
interval graph. :func:`compute_bco` finds a candidate with three sweeps of
lexicographic BFS (plain LexBFS, then LexBFS+ twice) and certifies it before
returning: on a connected graph an ordering in which every closed
neighbourhood is a run of consecutive positions is always a BCO.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphInputError, NotConnected, NotProperInterval
from .graph import Graph


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "VertexOrdering":
        order = tuple(order)
        n = len(order)
        position = [-1] * n
        for i, v in enumerate(order):
            if not isinstance(v, int) or not 0 <= v < n or position[v] >= 0:
                raise GraphInputError(f"not a permutation of range({n}): {order!r}")
            position[v] = i
        return cls(order, tuple(position))

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering.from_order(self.order[::-1])


def _as_ordering(g: Graph, ordering) -> VertexOrdering:
    if not isinstance(ordering, VertexOrdering):
        ordering = VertexOrdering.from_order(ordering)
    if len(ordering) != g.n:
        raise GraphInputError(f"ordering has {len(ordering)} vertices, graph has {g.n}")
    return ordering


def is_peo(g: Graph, ordering) -> bool:
    """Check the later neighbours of each vertex form a clique.

    Uses the usual earliest-later-neighbour reduction: with ``u`` the first
    later neighbour of ``v``, every other later neighbour of ``v`` must be
    adjacent to ``u``.
    """
    ordering = _as_ordering(g, ordering)
    pos = ordering.position
    nsets = g.neighbor_sets
    for v in range(g.n):
        pv = pos[v]
        later = [w for w in g.adj[v] if pos[w] > pv]
        if len(later) < 2:
            continue
        u = min(later, key=pos.__getitem__)
        nu = nsets[u]
        for w in later:
            if w != u and w not in nu:
                return False
    return True


def is_bco(g: Graph, ordering) -> bool:
    ordering = _as_ordering(g, ordering)
    return is_peo(g, ordering) and is_peo(g, ordering.reversed())


def has_contiguous_neighborhoods(g: Graph, ordering) -> bool:
    """True iff every closed neighbourhood occupies consecutive positions."""
    ordering = _as_ordering(g, ordering)
    pos = ordering.position
    for v, nbrs in enumerate(g.adj):
        pv = lo = hi = pos[v]
        for w in nbrs:
            pw = pos[w]
            if pw < lo:
                lo = pw
            elif pw > hi:
                hi = pw
        if hi - lo != len(nbrs):
            return False
    return True


def lex_bfs(g: Graph, tie_order: Sequence[int] | None = None) -> list[int]:
    """Lexicographic BFS by partition refinement, O(n + m).

    Among vertices with equal labels the one earliest in ``tie_order`` is
    visited first (default: lowest index). Passing the reverse of a previous
    sweep gives LexBFS+. On a disconnected graph the sweep restarts in each
    new component; see :func:`_lex_bfs`.
    """
    if tie_order is None:
        tie_order = range(g.n)
    return _lex_bfs(g.adj, tie_order)[0]


def _lex_bfs(adj, tie_order) -> tuple[list[int], bool]:
    """LexBFS sweep over adjacency lists ``adj`` plus a connectivity flag."""
    n = len(adj)
    # neighbour lists re-sorted by tie rank; adjacency lists are already
    # ascending, so the identity and its reverse need no bucketing pass
    if tie_order == range(n):
        nbrs = adj
    elif tie_order == range(n)[::-1]:
        nbrs = [a[::-1] for a in adj]
    else:
        nbrs = [[] for _ in range(n)]
        for v in tie_order:
            for u in adj[v]:
                nbrs[u].append(v)

    # all unvisited vertices sit in one doubly linked list; each class is a
    # contiguous run of it whose head is first_of[class]. Class 0 holds the
    # vertices no visited vertex has touched yet.
    seq = list(tie_order)
    nxt = [-1] * n
    prv = [-1] * n
    for a, b in zip(seq, seq[1:]):
        nxt[a] = b
        prv[b] = a
    head = seq[0] if seq else -1
    cls = [0] * n
    first_of = [head]
    split_to = [-1]
    split_stamp = [-1]
    visited = [False] * n
    out = []
    connected = True

    for step in range(n):
        p = head
        visited[p] = True
        out.append(p)
        c = cls[p]
        if c == 0 and step:
            connected = False
        q = nxt[p]
        if first_of[c] == p:
            first_of[c] = q if q >= 0 and cls[q] == c else -1
        head = q
        if q >= 0:
            prv[q] = -1
        for w in nbrs[p]:
            if visited[w]:
                continue
            c = cls[w]
            if split_stamp[c] != step:
                split_stamp[c] = step
                nc = split_to[c] = len(first_of)
                first_of.append(w)
                split_to.append(-1)
                split_stamp.append(-1)
            else:
                nc = split_to[c]
            cls[w] = nc
            f = first_of[c]
            if f == w:
                q = nxt[w]
                first_of[c] = q if q >= 0 and cls[q] == c else -1
                continue
            # move w to the tail of the new class, which ends right before f
            a, b = prv[w], nxt[w]
            if a >= 0:
                nxt[a] = b
            else:
                head = b
            if b >= 0:
                prv[b] = a
            a = prv[f]
            prv[w], nxt[w] = a, f
            prv[f] = w
            if a >= 0:
                nxt[a] = w
            else:
                head = w
    return out, connected


def _local_bco(g: Graph) -> tuple[list[int], list[list[int]], list[int]]:
    """Run the three sweeps, returning ``(old_of, local_adj, local_order)``.

    After the first sweep the graph is relabelled so vertex ``i`` is the
    ``i``-th vertex of that sweep; the later sweeps and the certification run
    on the relabelled adjacency lists, which keeps memory access mostly
    sequential on large inputs. ``old_of[i]`` maps a local label back.
    """
    n = g.n
    if n == 0:
        raise GraphInputError("graph has no vertices")
    old_of, connected = _lex_bfs(g.adj, range(n))
    if not connected:
        raise NotConnected("graph is not connected")
    new_of = [0] * n
    for i, v in enumerate(old_of):
        new_of[v] = i
    local = [sorted([new_of[u] for u in g.adj[v]]) for v in old_of]
    if n <= 2:
        return old_of, local, sorted(range(n), key=old_of.__getitem__)
    sweep = range(n)
    for _ in range(2):
        sweep = _lex_bfs(local, sweep[::-1])[0]
    pos = [0] * n
    for i, v in enumerate(sweep):
        pos[v] = i
    # contiguous closed neighbourhoods give the umbrella property
    # (u < v < w and uw in E imply uv, vw in E), which makes the ordering
    # and its reverse perfect elimination orderings
    for v, nbrs in enumerate(local):
        pv = lo = hi = pos[v]
        for w in nbrs:
            pw = pos[w]
            if pw < lo:
                lo = pw
            elif pw > hi:
                hi = pw
        if hi - lo != len(nbrs):
            raise NotProperInterval("graph is not a proper interval graph")
    return old_of, local, sweep


def compute_bco(g: Graph) -> VertexOrdering:
    """Bi-compatible elimination ordering of a connected proper interval graph.

    Raises :class:`NotConnected` for disconnected input and
    :class:`NotProperInterval` when the candidate ordering fails
    certification (no BCO exists). Graphs on one or two vertices get the
    identity ordering.
    """
    old_of, _, order = _local_bco(g)
    return VertexOrdering.from_order(old_of[v] for v in order)
