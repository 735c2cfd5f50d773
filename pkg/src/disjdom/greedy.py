"""Greedy approximation through constrained multiset multicover (CMSMC).

Vertex ``v_i`` becomes the multiset ``F_i`` holding ``b`` copies of every
vertex of ``N[v_i]`` and one copy of every vertex at distance two; every
element must be covered ``b`` times. A vertex set is b-disjunctive
dominating exactly when its multisets form such a cover, so the classic
greedy for multiset multicover gives, for ``b = 2``, a set at most
``ln(D^2 + D + 2) + 1`` times the optimum, ``D`` being the maximum degree.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import GraphInputError, Uncoverable
from .graph import Graph, _second


@dataclass(frozen=True)
class MulticoverInstance:
    ground: tuple[int, ...]
    requirement: Mapping[int, int]
    family: tuple[Mapping[int, int], ...]
    origin: tuple[int, ...]

    def size_of(self, i: int) -> int:
        return sum(self.family[i].values())

    def coverage(self, selection: Iterable[int]) -> dict[int, int]:
        """Total multiplicity of each element over the selected multisets."""
        cov = dict.fromkeys(self.ground, 0)
        for i in selection:
            for x, mult in self.family[i].items():
                cov[x] += mult
        return cov

    def is_cover(self, selection: Iterable[int]) -> bool:
        cov = self.coverage(selection)
        return all(cov[x] >= self.requirement[x] for x in self.ground)

    def dump(self) -> str:
        """Text form: ``<elem> <req>`` lines, then ``set <i>: <elem>:<mult> ...``."""
        lines = [f"{x} {self.requirement[x]}" for x in self.ground]
        for i, fam in enumerate(self.family):
            body = " ".join(f"{x}:{mult}" for x, mult in sorted(fam.items()))
            lines.append(f"set {i}: {body}".rstrip())
        return "\n".join(lines) + "\n"


def build_cmsmc(g: Graph, b: int = 2) -> MulticoverInstance:
    if b < 1:
        raise GraphInputError(f"b must be >= 1, got {b}")
    family = []
    for v in range(g.n):
        fam = dict.fromkeys(_second(g, v), 1)
        fam[v] = b
        for u in g.adj[v]:
            fam[u] = b
        family.append(MappingProxyType(dict(sorted(fam.items()))))
    ground = tuple(range(g.n))
    return MulticoverInstance(
        ground=ground,
        requirement=MappingProxyType(dict.fromkeys(ground, b)),
        family=tuple(family),
        origin=ground,
    )


def greedy_multicover(inst: MulticoverInstance) -> list[int]:
    """Indices of the chosen multisets, in selection order.

    Each round takes the unused multiset with the largest residual benefit
    ``sum(min(mult, residual[x]))`` (lowest index on ties) and lowers the
    residual requirements, never below zero. Benefits only shrink, so stale
    heap entries are upper bounds and can be re-evaluated lazily.
    """
    residual = dict(inst.requirement)
    left = sum(residual.values())

    def benefit(i):
        return sum(min(mult, residual[x]) for x, mult in inst.family[i].items())

    heap = [(-benefit(i), i) for i in range(len(inst.family))]
    heapq.heapify(heap)
    chosen = []
    while left > 0:
        if not heap:
            raise Uncoverable("requirements exceed what the whole family provides")
        stale, i = heapq.heappop(heap)
        gain = benefit(i)
        if gain != -stale:
            if gain > 0:
                heapq.heappush(heap, (-gain, i))
            continue
        if gain == 0:
            raise Uncoverable("requirements exceed what the whole family provides")
        chosen.append(i)
        for x, mult in inst.family[i].items():
            take = min(mult, residual[x])
            residual[x] -= take
            left -= take
    return chosen


def approx_disjunctive(g: Graph, b: int = 2) -> frozenset[int]:
    inst = build_cmsmc(g, b)
    return frozenset(inst.origin[i] for i in greedy_multicover(inst))


def ratio_bound(max_degree: int) -> float:
    """Guaranteed approximation factor for b = 2 at the given maximum degree."""
    return math.log(max_degree**2 + max_degree + 2) + 1
