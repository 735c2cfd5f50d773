"""Graph transforms that tie disjunctive domination to other problems.

``gc_transform``
    hang a pendant ``w_i`` on every vertex. Minimum disjunctive dominating
    sets of the result have the size of minimum 2-dominating sets of the
    input.
``domination_hardness_transform``
    chains ``v_i - w_i - z_i - p`` for every vertex plus a pendant ``q`` on
    ``p``. Disjunctive dominating sets of the result shrink to dominating
    sets of the input (:func:`extract_dominating`), and
    :func:`approx_domination` turns a disjunctive-domination approximation
    into a domination approximation.
``apx_gadget_transform``
    replaces each edge by a nine-vertex bipartite gadget of maximum degree
    three. Minimum disjunctive dominating sets of the result have size
    ``VC(G) + 2m``; :func:`extract_vertex_cover` maps any disjunctive
    dominating set back to a vertex cover that is at least ``2m`` smaller.

New vertices are appended after the originals, which keep their indices.
Each :class:`TransformResult` records a :class:`Role` for every vertex of
the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InvalidCertificate, MinDegreeTooLow
from .exact import SearchConfig, dominating_set_at_most
from .graph import (
    Graph,
    is_disjunctive_dominating,
    is_dominating,
    is_vertex_cover,
)
from .greedy import approx_disjunctive

GADGET_NAMES = ("w", "x", "y", "z", "a", "b", "c", "d", "f")
_GADGET_EDGES = (
    ("x", "w"), ("z", "w"), ("x", "y"), ("z", "y"),
    ("y", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "f"),
)


class Role(NamedTuple):
    """``kind`` is one of original, pendant_w, pendant_z, apex_p, apex_q, gadget.

    ``index`` is the source vertex (original / pendants) or the edge index
    (gadget); ``name`` is the gadget vertex name.
    """

    kind: str
    index: int = -1
    name: str = ""

    def tag(self) -> str:
        if self.kind in ("apex_p", "apex_q"):
            return self.kind
        if self.kind == "gadget":
            return f"gadget:{self.index}:{self.name}"
        return f"{self.kind}:{self.index}"

    @classmethod
    def from_tag(cls, tag: str) -> "Role":
        parts = tag.split(":")
        if len(parts) == 1:
            return cls(parts[0])
        if len(parts) == 2:
            return cls(parts[0], int(parts[1]))
        return cls(parts[0], int(parts[1]), parts[2])


@dataclass(frozen=True)
class TransformResult:
    h: Graph
    role: tuple[Role, ...]
    source_n: int
    # edges of the source graph in gadget order (apx transform only)
    source_edges: tuple[tuple[int, int], ...] = ()

    def vertex(self, kind: str, index: int = -1, name: str = "") -> int:
        return self._index[Role(kind, index, name)]

    @cached_property
    def _index(self) -> dict[Role, int]:
        return {r: i for i, r in enumerate(self.role)}

    def role_lines(self) -> str:
        return "".join(f"role {i} {r.tag()}\n" for i, r in enumerate(self.role))


def gc_transform(g: Graph) -> TransformResult:
    n = g.n
    edges = list(g.edges()) + [(v, n + v) for v in range(n)]
    roles = [Role("original", v) for v in range(n)] + [Role("pendant_w", v) for v in range(n)]
    return TransformResult(Graph.from_edges(2 * n, edges), tuple(roles), n)


def domination_hardness_transform(g: Graph) -> TransformResult:
    """Vertices: originals, then ``w_0..w_{n-1}``, ``z_0..z_{n-1}``, ``p``, ``q``."""
    n = g.n
    p, q = 3 * n, 3 * n + 1
    edges = list(g.edges())
    for v in range(n):
        edges += [(v, n + v), (n + v, 2 * n + v), (2 * n + v, p)]
    edges.append((p, q))
    roles = ([Role("original", v) for v in range(n)]
             + [Role("pendant_w", v) for v in range(n)]
             + [Role("pendant_z", v) for v in range(n)]
             + [Role("apex_p"), Role("apex_q")])
    return TransformResult(Graph.from_edges(3 * n + 2, edges), tuple(roles), n)


def extract_dominating(g: Graph, tr: TransformResult, dd: Iterable[int]) -> frozenset[int]:
    """Dominating set of ``g`` no larger than the disjunctive dominating set ``dd`` of ``tr.h``."""
    dd = set(dd)
    if not is_disjunctive_dominating(tr.h, dd, 2):
        raise InvalidCertificate("set is not disjunctive dominating on the transformed graph")
    n = g.n
    for v in range(n):
        w, z = n + v, 2 * n + v
        if w in dd or z in dd:
            dd -= {w, z}
            dd.add(v)
    result = frozenset(v for v in dd if v < n)
    assert is_dominating(g, result)
    return result


def approx_domination(g: Graph, l: int, cfg: SearchConfig | None = None) -> frozenset[int]:
    """Dominating set of ``g``: exact when the domination number is at most ``l``,
    otherwise extracted from a greedy disjunctive dominating set of the
    hardness graph."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    small = dominating_set_at_most(g, l, cfg)
    if small is not None:
        return small
    tr = domination_hardness_transform(g)
    return extract_dominating(g, tr, approx_disjunctive(tr.h, 2))


def apx_gadget_transform(g: Graph) -> TransformResult:
    """Replace every edge ``e_i = v_r v_s`` (``r < s``, edges in sorted order)
    by the gadget on ``w_i, x_i, y_i, z_i, a_i, b_i, c_i, d_i, f_i``::

        v_r - x_i - w_i - z_i - v_s
              x_i - y_i - z_i
                    y_i - a_i - b_i - c_i - d_i - f_i

    Gadget ``i`` occupies indices ``n + 9i .. n + 9i + 8`` in the order above.
    """
    if g.n and g.min_degree < 2:
        raise MinDegreeTooLow(f"minimum degree {g.min_degree} < 2")
    n = g.n
    src = tuple(g.edges())
    edges = []
    roles = [Role("original", v) for v in range(n)]
    for i, (r, s) in enumerate(src):
        base = n + 9 * i
        at = {name: base + k for k, name in enumerate(GADGET_NAMES)}
        roles.extend(Role("gadget", i, name) for name in GADGET_NAMES)
        edges.append((r, at["x"]))
        edges.append((s, at["z"]))
        edges.extend((at[a], at[b]) for a, b in _GADGET_EDGES)
    h = Graph.from_edges(n + 9 * len(src), edges)
    return TransformResult(h, tuple(roles), n, src)


def canonical_gadget_set(tr: TransformResult, cover: Iterable[int]) -> frozenset[int]:
    """``cover`` plus every ``y_i`` and ``d_i``."""
    n = tr.source_n
    extra = {n + 9 * i + GADGET_NAMES.index(name)
             for i in range(len(tr.source_edges)) for name in ("y", "d")}
    return frozenset(cover) | extra


def extract_vertex_cover(g: Graph, tr: TransformResult, dd: Iterable[int]) -> frozenset[int]:
    """Vertex cover of ``g`` of size at most ``|dd| - 2m``.

    Per gadget: ``f`` is traded for ``d``; any of ``a, b, c`` are traded for
    ``y``; then any of ``w, x, z`` are dropped and, if neither endpoint of the
    edge is chosen yet, the lower-indexed endpoint is added.
    """
    dd = set(dd)
    if not is_disjunctive_dominating(tr.h, dd, 2):
        raise InvalidCertificate("set is not disjunctive dominating on the gadget graph")
    n = tr.source_n
    at = [{name: n + 9 * i + k for k, name in enumerate(GADGET_NAMES)}
          for i in range(len(tr.source_edges))]
    for gad in at:
        if gad["f"] in dd:
            dd.discard(gad["f"])
            dd.add(gad["d"])
    for gad in at:
        abc = {gad["a"], gad["b"], gad["c"]}
        if abc & dd:
            dd -= abc
            dd.add(gad["y"])
    for gad, (r, s) in zip(at, tr.source_edges):
        wxz = {gad["w"], gad["x"], gad["z"]}
        if wxz & dd:
            dd -= wxz
            if r not in dd and s not in dd:
                dd.add(r)
    result = frozenset(v for v in dd if v < n)
    assert is_vertex_cover(g, result)
    return result
