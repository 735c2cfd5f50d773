"""Seeded graph generators.

All randomness comes from :class:`SplitMix64` so that a ``(family, n, seed,
extra)`` tuple reproduces the same edge list in any implementation that
follows the procedures documented on each generator:

* ``random()`` is ``(next_u64() >> 11) * 2**-53``;
* ``below(k)`` draws ``x = next_u64()`` until ``x >= 2**64 % k`` and
  returns ``x % k`` (unbiased);
* ``shuffle(xs)`` is Fisher-Yates from the back: for ``i = len-1 .. 1``
  swap ``xs[i]`` with ``xs[below(i + 1)]``.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .errors import GraphInputError
from .graph import Graph, is_connected

_MASK = (1 << 64) - 1
_UNIT = 1 << 20


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64 generator (64-bit state)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        floor = (1 << 64) % k
        while True:
            x = self.next_u64()
            if x >= floor:
                return x % k

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def _check_n(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise GraphInputError(f"n must be an integer >= {low}, got {n!r}")


def gen_proper_interval(n: int, seed: int, span: float | None = None) -> Graph:
    """Connected unit-interval graph on ``n`` vertices.

    Works on an integer grid with ``2**20`` ticks per unit length. Draws
    ``n`` left endpoints ``floor(random() * span * 2**20)`` (default
    ``span = n / 3``), sorts them, and caps every gap between consecutive
    endpoints at one unit so the model is connected. Sorted points
    ``i < j`` are adjacent iff ``x[j] - x[i] <= 2**20``. Point ``i`` is
    finally labelled ``perm[i]`` where ``perm = shuffle(list(range(n)))``.
    """
    _check_n(n)
    if span is None:
        span = n / 3
    if span <= 0:
        raise GraphInputError(f"span must be positive, got {span}")
    rng = SplitMix64(seed)
    raw = sorted(int(rng.random() * span * _UNIT) for _ in range(n))
    xs = [0] * n
    for i in range(1, n):
        xs[i] = xs[i - 1] + min(raw[i] - raw[i - 1], _UNIT)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    hi = 0
    for i in range(n):
        if hi < i + 1:
            hi = i + 1
        while hi < n and xs[hi] - xs[i] <= _UNIT:
            hi += 1
        edges.extend((perm[i], perm[j]) for j in range(i + 1, hi))
    return Graph.from_edges(n, edges)


def gen_connected(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """G(n, p) resampled until connected.

    Each try walks the pairs ``(u, v)``, ``u < v``, in lexicographic order and
    keeps the pair when ``random() < p``.
    """
    _check_n(n)
    if not 0 < p <= 1:
        raise GraphInputError(f"edge probability must be in (0, 1], got {p}")
    rng = SplitMix64(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_tries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g
    raise GraphInputError(f"no connected G({n}, {p}) after {max_tries} tries")


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a Pruefer sequence of ``below(n)`` draws."""
    _check_n(n)
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = SplitMix64(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def gen_cubic(n: int, seed: int, max_tries: int = 100_000) -> Graph:
    """Connected 3-regular graph from the pairing model.

    Each try shuffles the ``3n`` points (point ``t`` belongs to vertex
    ``t // 3``) and pairs positions ``2i, 2i+1``; tries with a loop, a
    repeated edge or more than one component are discarded.
    """
    _check_n(n, 4)
    if n % 2:
        raise GraphInputError(f"a cubic graph needs an even vertex count, got {n}")
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        points = list(range(3 * n))
        rng.shuffle(points)
        pairs = set()
        for i in range(0, 3 * n, 2):
            u, v = points[i] // 3, points[i + 1] // 3
            e = (min(u, v), max(u, v))
            if u == v or e in pairs:
                break
            pairs.add(e)
        else:
            g = Graph.from_edges(n, sorted(pairs))
            if is_connected(g):
                return g
    raise GraphInputError(f"no simple connected cubic graph after {max_tries} tries")


def named_graph(name: str) -> Graph:
    """Small named graphs: ``P<k>``, ``C<k>``, ``K<k>``, ``K<a>,<b>``, ``claw``, ``net``."""
    if name == "claw":
        return named_graph("K1,3")
    if name == "net":
        return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    m = re.fullmatch(r"([PCK])(\d+)(?:,(\d+))?", name)
    if not m:
        raise GraphInputError(f"unknown graph name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "K":
            raise GraphInputError(f"unknown graph name {name!r}")
        b = int(b)
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "P":
        return Graph.from_edges(a, [(i, i + 1) for i in range(a - 1)])
    if kind == "C":
        if a < 3:
            raise GraphInputError("cycles need at least 3 vertices")
        return Graph.from_edges(a, [(i, (i + 1) % a) for i in range(a)])
    return Graph.from_edges(a, combinations(range(a), 2))


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 1
    seed: int = 0
    extra: dict[str, Any] = field(default_factory=dict)


def generate(spec: GenSpec) -> Graph:
    """Dispatch on ``spec.family``."""
    extra = spec.extra
    if spec.family == "proper_interval":
        return gen_proper_interval(spec.n, spec.seed, extra.get("span"))
    if spec.family == "gnp_connected":
        return gen_connected(spec.n, extra.get("p", 0.5), spec.seed)
    if spec.family == "tree":
        return gen_tree(spec.n, spec.seed)
    if spec.family == "cubic":
        return gen_cubic(spec.n, spec.seed)
    if spec.family == "named":
        return named_graph(extra["name"])
    raise GraphInputError(f"unknown family {spec.family!r}")
