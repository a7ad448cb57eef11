"""Selecting the long path whose chords all lie on one side.

Two strategies: the rim of a maximum-degree vertex (``fan_path``) and the
concatenation of two Schnyder root paths from a diametral vertex
(``diameter_path``).  Both return a :class:`PathDecomposition` whose side
condition has been verified against the embedding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import SqrtBound, diameter_bound, fan_bound, fan_preferred, path_bound
from .errors import NotTriangulated, SideConditionViolated, TooSmall
from .graph import (
    ChordGraph,
    PlanarGraph,
    bfs_diameter,
    chords_of_path,
    greedy_independent_set,
    norm,
    schnyder_wood,
    side_at,
)


@dataclass(frozen=True)
class PathDecomposition:
    graph: PlanarGraph
    path: tuple[int, ...]
    apex: int
    chords: frozenset[tuple[int, int]]
    independent_set: frozenset[int]
    cover: frozenset[int]
    strategy: str
    guarantee: SqrtBound
    diameter: int | None = None

    @property
    def s(self) -> int:
        return self.path[0]

    @property
    def t(self) -> int:
        return self.path[-1]

    @property
    def l(self) -> int:
        return len(self.path)

    def reversed(self) -> "PathDecomposition":
        return PathDecomposition(
            self.graph, tuple(reversed(self.path)), self.apex, self.chords,
            self.independent_set, self.cover, self.strategy, self.guarantee, self.diameter,
        )


def _require(g: PlanarGraph) -> None:
    if g.n < 4:
        raise TooSmall("path strategies need n >= 4")
    if not g.is_triangulated():
        raise NotTriangulated("path strategies need a triangulated embedding")


def decompose(g: PlanarGraph, path: list[int], apex: int, strategy: str, guarantee: SqrtBound,
              diameter: int | None = None) -> PathDecomposition:
    """Verify the side condition for ``path``/``apex`` and attach the
    greedy independent set and its complementary chord cover."""
    s, t = path[0], path[-1]
    if not (g.has_edge(apex, s) and g.has_edge(apex, t) and g.has_edge(s, t)):
        raise SideConditionViolated(f"({apex}, {s}, {t}) is not a triangle")
    left, right = chords_of_path(g, path, apex=apex)
    # which side holds the apex: look for an apex edge at an interior vertex
    apex_side = None
    for i in range(1, len(path) - 1):
        if g.has_edge(apex, path[i]):
            apex_side = side_at(g.rotation[path[i]], path[i - 1], path[i + 1], apex)
            break
    if apex_side is None:
        # apex only touches s and t; the chord st is on the opposite side
        st = norm(s, t)
        if len(path) > 2:
            apex_side = "left" if st in right else "right"
        else:
            apex_side = "left"
    wrong = left if apex_side == "left" else right
    if wrong:
        raise SideConditionViolated(f"chords on the apex side: {sorted(wrong)}")
    chords = frozenset(left | right)
    cg = ChordGraph(tuple(path), chords)
    ind = greedy_independent_set(cg)
    cover = frozenset(path) - frozenset(ind)
    if 2 * len(ind) < len(path) + 1:
        raise SideConditionViolated("independent set below (l+1)/2")
    return PathDecomposition(g, tuple(path), apex, chords, frozenset(ind), cover, strategy, guarantee, diameter)


def fan_path(g: PlanarGraph) -> PathDecomposition:
    """Rim of a maximum-degree vertex ``u`` (smallest id on ties), with the
    face left of the dart from ``u`` to its last rim neighbour as outer face."""
    _require(g)
    delta = g.max_degree()
    u = min(v for v in range(g.n) if g.degree(v) == delta)
    rim = list(g.rotation[u])
    g2 = g.with_outer(u, rim[-1])
    return decompose(g2, rim, u, "fan", fan_bound(delta))


def diameter_path(g: PlanarGraph) -> PathDecomposition:
    """Path from ``s`` to a farthest vertex ``v`` and on to ``t`` along the
    Schnyder root paths of ``v``; ``u`` is the third outer vertex."""
    _require(g)
    d, s, v = bfs_diameter(g)
    r = g.rotation[s]
    # outer face: left of dart s -> r[0], i.e. (s, r[0], r[1])
    t, u = r[0], r[1]
    g2 = g.with_outer(s, t)
    outer = g2.outer_face()
    if sorted(outer) != sorted((s, t, u)):
        raise NotTriangulated("outer face is not the expected triangle")
    if v == u:
        t, u = u, t
    if v == t:
        path = [s, t]
    else:
        wood = schnyder_wood(g2, (s, t, u))
        to_s = wood.path_to_root(v, 0)
        to_t = wood.path_to_root(v, 1)
        path = list(reversed(to_s)) + to_t[1:]
    if len(path) < 2 * d:
        raise SideConditionViolated(f"diameter path has {len(path)} < 2d vertices")
    return decompose(g2, path, u, "diameter", diameter_bound(d), diameter=d)


def choose_strategy(g: PlanarGraph) -> PathDecomposition:
    """Fan path when the maximum degree is at least ``log2 n + 2``, otherwise
    the diameter path."""
    _require(g)
    if fan_preferred(g.n, g.max_degree()):
        return fan_path(g)
    return diameter_path(g)


def general_guarantee(pd: PathDecomposition) -> SqrtBound:
    return path_bound(pd.l)
