"""Exact minimum solutions by search, used as ground truth elsewhere.

Disjunctive domination, domination and 2-domination share one covering
engine. Each vertex ``x`` carries a requirement of the form

    D meets strong[x]   or   |D & weak[x]| >= q

which is ``N[x]`` / ``N2(x)`` / ``b`` for b-disjunctive domination,
``N[x]`` / nothing for domination and ``{x}`` / ``N(x)`` / 2 for
2-domination. Vertex sets are Python ints used as bitmasks.

Two strategies are available. ``exhaustive`` walks subsets by increasing
size in lexicographic order, so it returns the lexicographically least
optimum. ``branch_and_bound`` picks the unsatisfied vertex with the fewest
ways left to satisfy it and branches on which candidate (increasing index)
is the first one taken, excluding the earlier ones; a disjoint-packing
lower bound prunes the tree. It returns the first optimum met in that
branching order, or with ``canonical=True`` the lexicographically least one
(found by fixing vertices in increasing order while a cover of the optimal
size still exists). Disconnected graphs are solved one component at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, GraphInputError
from .graph import (
    Graph,
    _second,
    connected_components,
    is_disjunctive_dominating,
    is_dominating,
    is_two_dominating,
    is_vertex_cover,
)

STRATEGIES = ("exhaustive", "branch_and_bound")


@dataclass(frozen=True)
class SearchConfig:
    strategy: str = "branch_and_bound"
    node_budget: int = 10**8
    b: int = 2
    canonical: bool = False

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise GraphInputError(f"unknown strategy {self.strategy!r}")
        if self.node_budget <= 0:
            raise GraphInputError("node_budget must be positive")
        if self.b < 1:
            raise GraphInputError(f"b must be >= 1, got {self.b}")


@dataclass(frozen=True)
class CoverRequirement:
    """Where a vertex stands with respect to b-disjunctive domination by D."""

    satisfied: bool
    credit: int
    b: int

    @property
    def missing(self) -> int:
        """Distance-two picks still needed if no closed neighbour is taken."""
        return 0 if self.satisfied else self.b - self.credit


def cover_requirements(g: Graph, d, b: int = 2) -> list[CoverRequirement]:
    members = frozenset(d)
    out = []
    for v in range(g.n):
        credit = min(b, len(_second(g, v) & members))
        closed = v in members or not members.isdisjoint(g.adj[v])
        out.append(CoverRequirement(closed or credit >= b, credit, b))
    return out


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


def _masks(g: Graph, kind: str, b: int) -> tuple[list[int], list[int], int]:
    strong, weak = [], []
    for v in range(g.n):
        nb = 0
        for u in g.adj[v]:
            nb |= 1 << u
        if kind == "ddp":
            s2 = 0
            for u in _second(g, v):
                s2 |= 1 << u
            strong.append(nb | 1 << v)
            weak.append(s2)
        elif kind == "dom":
            strong.append(nb | 1 << v)
            weak.append(0)
        else:  # 2dom
            strong.append(1 << v)
            weak.append(nb)
    q = b if kind == "ddp" else 2
    return strong, weak, q


def _all_satisfied(strong, weak, q, d: int) -> bool:
    for s, w in zip(strong, weak):
        if not s & d and (w & d).bit_count() < q:
            return False
    return True


def _exhaustive_cover(n, strong, weak, q, counter, limit) -> int | None:
    for k in range(min(n, limit) + 1):
        for combo in combinations(range(n), k):
            counter.tick()
            d = 0
            for v in combo:
                d |= 1 << v
            if _all_satisfied(strong, weak, q, d):
                return d
    return None


def _bnb_cover(n, strong, weak, q, counter, limit, chosen=0, banned=0,
               first=False) -> int | None:
    """Smallest cover of size <= limit containing ``chosen`` and avoiding
    ``banned``, or None. With ``first`` any such cover is returned."""
    best_size = limit + 1
    best = None

    def rec(chosen: int, banned: int, size: int):
        nonlocal best_size, best
        if first and best is not None:
            return
        counter.tick()
        items = []
        pick = None
        pick_key = n + 2
        for x in range(n):
            if strong[x] & chosen:
                continue
            wk = weak[x]
            credit = (wk & chosen).bit_count()
            if credit >= q:
                continue
            closed = strong[x] & ~banned
            far = wk & ~banned & ~chosen
            need = q - credit
            far_ok = far.bit_count() >= need
            if closed:
                opts = closed | far if far_ok else closed
                key = closed.bit_count() + far_ok
                items.append((opts.bit_count(), x, opts, 1))
            elif far_ok:
                opts = far
                key = far.bit_count()
                items.append((key, x, opts, need))
            else:
                return
            if key < pick_key:
                pick_key = key
                pick = (closed, far, far_ok)
        if not items:
            best_size, best = size, chosen
            return
        if size + 1 >= best_size:
            return
        items.sort()
        used = lb = 0
        for _, _, opts, need in items:
            if not opts & used:
                used |= opts
                lb += need
                if size + lb >= best_size:
                    return
        closed, far, far_ok = pick
        branch = closed if closed else far
        while branch:
            c = branch & -branch
            branch ^= c
            rec(chosen | c, banned, size + 1)
            banned |= c
        if closed and far_ok:
            rec(chosen, banned, size)

    rec(chosen, banned, chosen.bit_count())
    return best


def _lex_least(n, strong, weak, q, counter, size) -> int:
    """Lexicographically least cover among those of the (optimal) ``size``."""
    chosen = banned = 0
    for v in range(n):
        if chosen.bit_count() == size:
            break
        bit = 1 << v
        if _bnb_cover(n, strong, weak, q, counter, size, chosen | bit, banned, True) is not None:
            chosen |= bit
        else:
            banned |= bit
    return chosen


def _solve_cover(g: Graph, kind: str, b: int, cfg: SearchConfig,
                 limit: int | None = None) -> frozenset[int] | None:
    """Per-component search; ``limit`` caps the total size (None: no cap)."""
    counter = _Counter(cfg.node_budget)
    search = _exhaustive_cover if cfg.strategy == "exhaustive" else _bnb_cover
    result = []
    remaining = g.n if limit is None else limit
    for comp in connected_components(g):
        sub, old = g.induced_subgraph(comp) if len(comp) < g.n else (g, comp)
        strong, weak, q = _masks(sub, kind, b)
        cap = len(comp) if limit is None else remaining
        if kind == "ddp" and cfg.strategy == "branch_and_bound" and limit is None:
            from .greedy import approx_disjunctive
            cap = min(cap, len(approx_disjunctive(sub, b)))
        d = search(sub.n, strong, weak, q, counter, cap)
        if d is None:
            return None
        if cfg.canonical and search is _bnb_cover:
            d = _lex_least(sub.n, strong, weak, q, counter, d.bit_count())
        picked = [old[i] for i in range(sub.n) if d >> i & 1]
        remaining -= len(picked)
        result.extend(picked)
    return frozenset(result)


def _config(cfg: SearchConfig | None) -> SearchConfig:
    return SearchConfig() if cfg is None else cfg


def exact_disjunctive(g: Graph, b: int | None = None,
                      cfg: SearchConfig | None = None) -> frozenset[int]:
    """Minimum b-disjunctive dominating set (``b`` defaults to ``cfg.b``)."""
    cfg = _config(cfg)
    b = cfg.b if b is None else b
    if b < 1:
        raise GraphInputError(f"b must be >= 1, got {b}")
    result = _solve_cover(g, "ddp", b, cfg)
    assert is_disjunctive_dominating(g, result, b)
    return result


def exact_domination(g: Graph, cfg: SearchConfig | None = None) -> frozenset[int]:
    result = _solve_cover(g, "dom", 1, _config(cfg))
    assert is_dominating(g, result)
    return result


def exact_two_domination(g: Graph, cfg: SearchConfig | None = None) -> frozenset[int]:
    result = _solve_cover(g, "2dom", 2, _config(cfg))
    assert is_two_dominating(g, result)
    return result


def dominating_set_at_most(g: Graph, limit: int,
                           cfg: SearchConfig | None = None) -> frozenset[int] | None:
    """A minimum dominating set if the domination number is <= ``limit``, else None."""
    return _solve_cover(g, "dom", 1, _config(cfg), limit=limit)


def _bnb_vertex_cover(n, nbr, counter, chosen=0, dropped=0) -> int | None:
    """Smallest cover containing ``chosen`` and avoiding ``dropped``, or None.

    Every neighbour of a dropped vertex must already be in ``chosen``.
    """
    full = (1 << n) - 1
    best_size = n + 1
    best = None

    def rec(chosen: int, dropped: int, size: int):
        nonlocal best_size, best
        counter.tick()
        live = full & ~(chosen | dropped)
        pick, pick_deg = -1, 0
        m = live
        while m:
            c = m & -m
            m ^= c
            v = c.bit_length() - 1
            dv = (nbr[v] & live).bit_count()
            if dv > pick_deg:
                pick, pick_deg = v, dv
        if pick < 0:
            if size < best_size:
                best_size, best = size, chosen
            return
        # maximal matching lower bound
        lb = 0
        free = live
        m = live
        while m:
            c = m & -m
            m ^= c
            if not free & c:
                continue
            v = c.bit_length() - 1
            mate = nbr[v] & free
            if mate:
                lb += 1
                free &= ~(c | (mate & -mate))
        if size + lb >= best_size:
            return
        rec(chosen | 1 << pick, dropped, size + 1)
        others = nbr[pick] & live
        rec(chosen | others, dropped | 1 << pick, size + others.bit_count())

    rec(chosen, dropped, chosen.bit_count())
    return best


def _lex_least_vertex_cover(n, nbr, counter, size) -> int:
    chosen = dropped = 0
    for v in range(n):
        bit = 1 << v
        if chosen & bit:
            continue
        d = _bnb_vertex_cover(n, nbr, counter, chosen | bit, dropped)
        if d is not None and d.bit_count() <= size:
            chosen |= bit
        else:
            dropped |= bit
            chosen |= nbr[v]
    return chosen


def exact_vertex_cover(g: Graph, cfg: SearchConfig | None = None) -> frozenset[int]:
    cfg = _config(cfg)
    counter = _Counter(cfg.node_budget)
    result = []
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub, old = g.induced_subgraph(comp) if len(comp) < g.n else (g, comp)
        nbr = [sum(1 << u for u in sub.adj[v]) for v in range(sub.n)]
        if cfg.strategy == "exhaustive":
            edges = list(sub.edges())
            d = None
            for k in range(sub.n + 1):
                for combo in combinations(range(sub.n), k):
                    counter.tick()
                    s = set(combo)
                    if all(u in s or v in s for u, v in edges):
                        d = sum(1 << v for v in combo)
                        break
                if d is not None:
                    break
        else:
            d = _bnb_vertex_cover(sub.n, nbr, counter)
            if cfg.canonical:
                d = _lex_least_vertex_cover(sub.n, nbr, counter, d.bit_count())
        result.extend(old[i] for i in range(sub.n) if d >> i & 1)
    result = frozenset(result)
    assert is_vertex_cover(g, result)
    return result
