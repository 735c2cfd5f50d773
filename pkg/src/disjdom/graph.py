"""Undirected simple graphs on dense 0-based vertex indices.

The module holds the :class:`Graph` container, neighbourhood and distance
primitives, the edge-list text format, and verifiers for every solution kind
the package produces (b-disjunctive domination, domination, 2-domination and
vertex cover).

Edge-list format::

    # comment
    p <n> <m>
    e <u> <v>
    ...

Endpoints are 0-based. Serialisation always emits edges with ``u < v`` in
sorted order, so ``serialize_graph(parse_graph(t))`` is the canonical form
of ``t``.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphInputError, ParseError

VertexSet = frozenset


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Use
    :meth:`from_edges` to build one from an edge list.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError(f"expected {self.n} adjacency lists, got {len(self.adj)}")
        seen = set()
        half = 0
        for u, nbrs in enumerate(self.adj):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphInputError(f"neighbour {v} of {u} out of range [0, {self.n})")
                if v == u:
                    raise GraphInputError(f"self-loop at {u}")
                if v <= prev:
                    raise GraphInputError(f"adjacency of {u} not strictly increasing")
                prev = v
                if u < v:
                    seen.add((u, v))
                    half += 1
                elif (v, u) not in seen:
                    # v < u: the pair must already have been listed from v's side
                    raise GraphInputError(f"adjacency not symmetric at edge {v}-{u}")
        if sum(len(a) for a in self.adj) != 2 * half:
            raise GraphInputError("adjacency not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad indices."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {u}-{v} has an endpoint outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphInputError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Return the isomorphic graph in which vertex ``v`` is renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (sorted) and the new-to-old index map."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u in old for v in self.adj[u]
                 if v > u and v in new_of]
        return Graph.from_edges(len(old), edges), old


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise GraphInputError(f"vertex {v!r} out of range [0, {g.n})")


def _as_members(g: Graph, d: Iterable[int]) -> frozenset[int]:
    members = frozenset(d)
    for v in members:
        _check_vertex(g, v)
    return members


def neighbors_closed(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(g.adj[v]) | {v}


def second_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Vertices at hop distance exactly 2 from ``v``."""
    _check_vertex(g, v)
    return frozenset(_second(g, v))


def _second(g: Graph, v: int) -> set[int]:
    adj = g.adj
    out = set()
    for u in adj[v]:
        out.update(adj[u])
    out.difference_update(adj[v])
    out.discard(v)
    return out


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get ``-1``."""
    _check_vertex(g, source)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


class DistanceOracle:
    """Per-source BFS distances, computed on first use and cached."""

    def __init__(self, g: Graph):
        self.g = g
        self._rows: dict[int, list[int]] = {}

    def row(self, source: int) -> list[int]:
        row = self._rows.get(source)
        if row is None:
            row = self._rows[source] = bfs_distances(self.g, source)
        return row

    def dist(self, u: int, v: int) -> float:
        d = self.row(u)[v]
        return math.inf if d < 0 else d

    def matrix(self) -> list[list[int]]:
        """All-pairs table (``-1`` for unreachable); O(n(n+m)) time, O(n^2) memory."""
        return [self.row(s) for s in range(self.g.n)]


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    stack.append(w)
        out.append(sorted(members))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def diameter(g: Graph) -> float:
    """Largest finite-or-infinite eccentricity; ``inf`` when disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        row = bfs_distances(g, s)
        if min(row) < 0:
            return math.inf
        best = max(best, max(row))
    return best


# -- verifiers ---------------------------------------------------------------

def is_disjunctive_dominating(g: Graph, d: Iterable[int], b: int = 2) -> bool:
    """True iff every vertex outside ``d`` has a neighbour in ``d`` or at
    least ``b`` members of ``d`` at distance exactly two."""
    if b < 1:
        raise GraphInputError(f"b must be >= 1, got {b}")
    members = _as_members(g, d)
    adj = g.adj
    for v in range(g.n):
        if v in members or not members.isdisjoint(adj[v]):
            continue
        if len(_second(g, v) & members) < b:
            return False
    return True


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    members = _as_members(g, s)
    return all(v in members or not members.isdisjoint(g.adj[v]) for v in range(g.n))


def is_two_dominating(g: Graph, s: Iterable[int]) -> bool:
    members = _as_members(g, s)
    return all(v in members or len(members.intersection(g.adj[v])) >= 2
               for v in range(g.n))


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    members = _as_members(g, s)
    return all(u in members or v in members for u, v in g.edges())


class Problem(str, enum.Enum):
    DISJUNCTIVE = "ddp"
    DOMINATION = "dom"
    TWO_DOMINATION = "2dom"
    VERTEX_COVER = "vc"


@dataclass(frozen=True)
class Solution:
    """A vertex set tagged with the problem it claims to solve."""

    members: frozenset[int]
    problem: Problem
    b: int = 2

    def __len__(self):
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


def verify(g: Graph, sol: Solution) -> bool:
    if sol.problem is Problem.DISJUNCTIVE:
        return is_disjunctive_dominating(g, sol.members, sol.b)
    if sol.problem is Problem.DOMINATION:
        return is_dominating(g, sol.members)
    if sol.problem is Problem.TWO_DOMINATION:
        return is_two_dominating(g, sol.members)
    return is_vertex_cover(g, sol.members)


# -- edge-list I/O -----------------------------------------------------------

def _int_token(tok: str, lineno: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno) from None
    if value < 0:
        raise ParseError(f"{what} {value} is negative", lineno)
    return value


def parse_graph(text: str) -> Graph:
    n = expected_m = None
    header_line = 0
    nbrs: list[set[int]] = []
    m = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"second header (first on line {header_line})", lineno)
            if len(parts) != 3:
                raise ParseError("malformed header, expected 'p <n> <m>'", lineno)
            n = _int_token(parts[1], lineno, "vertex count")
            expected_m = _int_token(parts[2], lineno, "edge count")
            header_line = lineno
            nbrs = [set() for _ in range(n)]
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before header", lineno)
            if len(parts) != 3:
                raise ParseError("malformed edge, expected 'e <u> <v>'", lineno)
            u = _int_token(parts[1], lineno, "endpoint")
            v = _int_token(parts[2], lineno, "endpoint")
            if u >= n or v >= n:
                raise ParseError(f"endpoint out of range for n={n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at {u}", lineno)
            if v in nbrs[u]:
                raise ParseError(f"duplicate edge {u}-{v}", lineno)
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing header 'p <n> <m>'")
    if m != expected_m:
        raise ParseError(f"header declares {expected_m} edges, found {m}", header_line)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
