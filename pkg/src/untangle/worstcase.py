"""Collinear instances on which few vertices can stay fixed, with explicit
plane drawings that keep the largest known fixed sets.

``sigma(q)`` concatenates ``q`` blocks; block ``i`` lists ``(q-1)q+i, ...,
q+i, i``.  Its longest monotone subsequences have length ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .geom import Drawing, Point, Rat, is_plane
from .graph import PlanarGraph


@dataclass(frozen=True)
class SigmaSequence:
    q: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def position(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.values)}


def sigma(q: int) -> SigmaSequence:
    if q < 1:
        raise ValueError("q must be positive")
    vals = [j * q + i for i in range(q) for j in range(q - 1, -1, -1)]
    return SigmaSequence(q, tuple(vals))


@dataclass(frozen=True)
class Instance:
    """A graph with a collinear drawing; ``special`` names the extra
    vertices (``a``, ``b`` or ``c``)."""

    graph: PlanarGraph
    drawing: Drawing
    family: str
    q: int
    special: dict[str, int]

    def header(self) -> str:
        return f"family {self.family} q {self.q}"


def planar_worstcase(q: int) -> Instance:
    """Path ``0..q^2-1`` plus an edge ``ab`` whose ends see every path
    vertex.  All vertices lie on ``x = 0``: path vertices top-down in
    ``sigma`` order, then ``a`` and ``b`` below."""
    if q < 2:
        raise ValueError("q must be at least 2")
    n = q * q
    a, b = n, n + 1
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(a, i) for i in range(n)] + [(b, i) for i in range(n)] + [(a, b)]
    pos = sigma(q).position()
    d = {v: Point(Rat(0), Rat(n - pos[v])) for v in range(n)}
    d[a] = Point(Rat(0), Rat(-1))
    d[b] = Point(Rat(0), Rat(-2))
    return Instance(PlanarGraph.from_edges(n + 2, edges), d, "planar", q, {"a": a, "b": b})


def outerplanar_worstcase(q: int) -> Instance:
    """Path ``0..q^2-1`` plus a vertex ``c`` adjacent to all of it, on the
    line ``y = 0``: path vertices left to right in ``sigma`` order, ``c`` at
    the right end."""
    if q < 2:
        raise ValueError("q must be at least 2")
    n = q * q
    c = n
    edges = [(i, i + 1) for i in range(n - 1)] + [(c, i) for i in range(n)]
    pos = sigma(q).position()
    d = {v: Point(Rat(pos[v]), Rat(0)) for v in range(n)}
    d[c] = Point(Rat(n), Rat(0))
    return Instance(PlanarGraph.from_edges(n + 1, edges), d, "outerplanar", q, {"c": c})


def planar_fixed_set(q: int) -> frozenset[int]:
    """Vertices kept by :func:`planar_witness`.

    For ``q >= 3`` these are ``0, q, ..., (q-1)q`` and ``(q-1)q + 2``.  For
    ``q = 2`` the last of these would be ``a``, and no three vertices of the
    instance can stay (see :func:`collinear_obstruction`), so only ``0`` and
    ``2`` are kept.
    """
    if q == 2:
        return frozenset({0, 2})
    return frozenset([j * q for j in range(q)] + [(q - 1) * q + 2])


def outerplanar_fixed_set(q: int) -> frozenset[int]:
    """``0, 1, ..., q-1`` and ``2q, 3q, ..., (q-1)q``."""
    return frozenset(list(range(q)) + [j * q for j in range(2, q)])


def planar_witness(q: int) -> Drawing:
    """Plane drawing of ``planar_worstcase(q)`` fixing :func:`planar_fixed_set`.

    The path climbs along ``x = 0`` through the fixed vertices ``0, q, ...``,
    hooks over to the right and comes back down to ``(q-1)q + 2``; the rest
    of the path leaves to the lower left.  ``a`` sits far to the lower left,
    ``b`` inside the hook and reaches the tail through the empty stretch of
    the line below vertex ``0``.
    """
    inst = planar_worstcase(q)
    n = q * q
    a, b = inst.special["a"], inst.special["b"]
    d0 = inst.drawing
    if q == 2:
        # 0 at (0,3), 2 at (0,4); 1 between them, 3 lower right
        d = dict(d0)
        d[1] = Point(Rat(0), Rat(7, 2))
        d[3] = Point(Rat(1), Rat(2))
        d[a] = Point(Rat(-1), Rat(2))
        d[b] = Point(Rat(2, 5), Rat(3))
        return d
    top = (q - 1) * q
    y0 = d0[0].y
    d: Drawing = {}
    for i in range(top + 1):
        d[i] = Point(Rat(0), y0 + Rat(i, q))
    hook, star = top + 1, top + 2
    base = d0[star]
    d[hook] = Point(Rat(1), Rat(n + 1))
    d[star] = base
    delta = Rat(1, 8 * q)
    for k in range(1, n - star):
        d[star + k] = Point(Rat(-k), base.y - k * delta)
    big = 8 * q * (q + 2)
    d[a] = Point(Rat(-big), base.y - big * delta - 1)
    gap = y0 - base.y
    d[b] = Point(Rat(1, 4), base.y + gap / 2)
    return d


def outerplanar_witness(q: int) -> Drawing:
    """Plane drawing of ``outerplanar_worstcase(q)`` fixing
    :func:`outerplanar_fixed_set`.

    The path runs right along the line through ``0, ..., q-1``, dips below
    the line on the vertical ``x = q-2``, returns to the line at ``2q`` and
    walks left through ``3q, ..., (q-1)q``.  ``c`` is lifted just above the
    gap at ``x = q-2`` and sees the dip through it.
    """
    inst = outerplanar_worstcase(q)
    n = q * q
    c = inst.special["c"]
    d0 = inst.drawing
    d: Drawing = {}
    for i in range(q):
        d[i] = d0[i]
    xg = Rat(q - 2)
    for k, v in enumerate(range(q, 2 * q)):
        d[v] = Point(xg, Rat(-(q - k)))
    for j in range(2, q):
        d[j * q] = d0[j * q]
        if j + 1 < q:
            for t in range(1, q):
                d[j * q + t] = Point(d0[j * q].x - Rat(t, q), Rat(0))
    if q >= 3:
        for k, v in enumerate(range((q - 1) * q + 1, n), start=1):
            d[v] = Point(Rat(-k), Rat(0))
    d[c] = Point(xg + Rat(1, 2), Rat(1))
    return d


def fixed_vertices(d0: Drawing, d1: Drawing) -> frozenset[int]:
    return frozenset(v for v in d0 if d0[v] == d1.get(v))


def collinear_obstruction(inst: Instance, keep: frozenset[int]) -> bool:
    """True if keeping ``keep`` at their collinear positions forces an edge
    through a kept vertex: some edge joins two kept vertices with a third
    kept vertex strictly between them on the line."""
    d = inst.drawing
    edges = inst.graph.edges

    def key(v):
        p = d[v]
        return (p.x, p.y)

    for u, v in edges:
        if u in keep and v in keep:
            lo, hi = sorted((key(u), key(v)))
            if any(lo < key(w) < hi for w in keep if w not in (u, v)):
                return True
    return False


def max_unobstructed(inst: Instance, size: int) -> list[frozenset[int]]:
    """All vertex sets of the given size that pass the collinear test."""
    verts = range(inst.graph.n)
    return [frozenset(s) for s in combinations(verts, size) if not collinear_obstruction(inst, frozenset(s))]


def check_witness(inst: Instance, d: Drawing, expected: frozenset[int]) -> bool:
    return is_plane(inst.graph, d) and fixed_vertices(inst.drawing, d) == expected
