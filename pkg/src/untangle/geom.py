"""Exact rational geometry: orientation, segment crossings, plane checks and
polygon kernels.

Coordinates are exact rationals (``gmpy2.mpq``, aliased as ``Rat``); nothing
in this module ever touches a float.  Bulk predicates (``crossing_pairs``) rescale the
coordinates to a common integer grid first, which keeps them exact while
avoiding per-operation gcd normalisation.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from gmpy2 import lcm, mpq, mpz

from .errors import EmptyKernel, InvalidPolygon, MissingPosition, OutOfRange

Rat = mpq


class Point(NamedTuple):
    x: Rat
    y: Rat


def pt(x, y) -> Point:
    """Build a point, converting ints, strings or fractions to exact rationals."""
    return Point(Rat(x), Rat(y))


Segment = tuple[Point, Point]
Drawing = dict[int, Point]


def format_rat(r: Rat) -> str:
    r = Rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rat(text: str) -> Rat:
    if "." in text or "e" in text.lower():
        raise ValueError(f"not a rational literal: {text!r}")
    return Rat(text)


def bit_length(r: Rat) -> int:
    """Bits needed for numerator plus denominator of ``r``."""
    r = Rat(r)
    return abs(r.numerator).bit_length() + r.denominator.bit_length()


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orient(p: Point, q: Point, r: Point) -> int:
    """+1 if ``r`` is strictly left of the directed line p->q, 0 if collinear,
    -1 if strictly right."""
    return _sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def _on_closed_segment(p, a, b) -> bool:
    # assumes p, a, b collinear
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _cross_raw(a, b, c, d) -> bool:
    """Segment crossing on raw coordinate tuples (ints or rationals)."""
    shared = ({a, b} & {c, d})
    if len(shared) == 2:
        return True
    if len(shared) == 1:
        p = shared.pop()
        q = b if a == p else a
        r = d if c == p else c
        # only a shared endpoint, unless the segments overlap along a line
        if (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) != 0:
            return False
        return (q[0] - p[0]) * (r[0] - p[0]) + (q[1] - p[1]) * (r[1] - p[1]) > 0
    o1 = _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    o2 = _sign((b[0] - a[0]) * (d[1] - a[1]) - (b[1] - a[1]) * (d[0] - a[0]))
    o3 = _sign((d[0] - c[0]) * (a[1] - c[1]) - (d[1] - c[1]) * (a[0] - c[0]))
    o4 = _sign((d[0] - c[0]) * (b[1] - c[1]) - (d[1] - c[1]) * (b[0] - c[0]))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_closed_segment(c, a, b):
        return True
    if o2 == 0 and _on_closed_segment(d, a, b):
        return True
    if o3 == 0 and _on_closed_segment(a, c, d):
        return True
    if o4 == 0 and _on_closed_segment(b, c, d):
        return True
    return False


def segments_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments meet anywhere other than a common endpoint.

    Collinear overlap counts as a crossing, as does an endpoint of one segment
    lying in the relative interior of the other.
    """
    return _cross_raw(s1[0], s1[1], s2[0], s2[1])


def point_on_open_segment(p: Point, a: Point, b: Point) -> bool:
    return p != a and p != b and orient(a, b, p) == 0 and _on_closed_segment(p, a, b)


def _edges_of(g) -> list[tuple[int, int]]:
    edges = getattr(g, "edges", g)
    return [tuple(e) for e in edges]


def _vertices_of(g, edges) -> list[int]:
    n = getattr(g, "n", None)
    if n is not None:
        return list(range(n))
    return sorted({v for e in edges for v in e})


def to_integer_grid(d: Mapping[int, Point], vertices: Iterable[int]) -> dict[int, tuple[int, int]]:
    """Scale the given positions by the lcm of all denominators.

    The map is a uniform positive scaling, so every orientation sign and
    crossing relation is preserved exactly.
    """
    vertices = list(vertices)
    den = mpz(1)
    for v in vertices:
        if v not in d:
            raise MissingPosition(f"vertex {v} has no position")
        p = d[v]
        den = lcm(lcm(den, mpz(p[0].denominator)), mpz(p[1].denominator))
    # GMP integers multiply large coordinates several times faster than int
    return {v: ((mpq(d[v][0]) * den).numerator, (mpq(d[v][1]) * den).numerator) for v in vertices}


def crossing_pairs(g, d: Mapping[int, Point]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All unordered pairs of distinct edges whose straight-line segments cross.

    ``g`` is anything with an ``edges`` attribute (or an iterable of vertex
    pairs).  Raises :class:`MissingPosition` if an edge endpoint is unplaced.
    """
    edges = _edges_of(g)
    grid = to_integer_grid(d, _vertices_of(g, edges))
    segs = []
    for e in edges:
        a, b = grid[e[0]], grid[e[1]]
        segs.append((min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]), a, b, e))
    segs.sort(key=lambda s: s[0])
    out = []
    for i, s in enumerate(segs):
        x1 = s[1]
        for t in segs[i + 1:]:
            if t[0] > x1:
                break
            if t[2] > s[3] or s[2] > t[3]:
                continue
            if _cross_raw(s[4], s[5], t[4], t[5]):
                e, f = s[6], t[6]
                out.append((e, f) if e <= f else (f, e))
    out.sort()
    return out


def vertex_edge_incidences(g, d: Mapping[int, Point]) -> list[tuple[int, tuple[int, int]]]:
    """Vertices lying on the closure of a non-incident edge."""
    edges = _edges_of(g)
    verts = _vertices_of(g, edges)
    grid = to_integer_grid(d, verts)
    by_x = sorted(verts, key=lambda v: grid[v][0])
    xs = [grid[v][0] for v in by_x]
    out = []
    for e in edges:
        a, b = grid[e[0]], grid[e[1]]
        lo = bisect.bisect_left(xs, min(a[0], b[0]))
        hi = bisect.bisect_right(xs, max(a[0], b[0]))
        for v in by_x[lo:hi]:
            if v in e:
                continue
            p = grid[v]
            if p == a or p == b:
                out.append((v, e))
                continue
            if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) == 0 and _on_closed_segment(p, a, b):
                out.append((v, e))
    out.sort()
    return out


def is_plane(g, d: Mapping[int, Point]) -> bool:
    """True iff no two edges cross and no vertex lies on a non-incident edge."""
    return not crossing_pairs(g, d) and not vertex_edge_incidences(g, d)


# ---------------------------------------------------------------------------
# polygons
# ---------------------------------------------------------------------------


def signed_area2(pts: Sequence[Point]) -> Rat:
    """Twice the signed area (positive for counter-clockwise)."""
    s = Rat(0)
    k = len(pts)
    for i in range(k):
        a, b = pts[i], pts[(i + 1) % k]
        s += a[0] * b[1] - a[1] * b[0]
    return s


def _is_simple(pts: Sequence[Point]) -> bool:
    k = len(pts)
    if len(set(pts)) != k:
        return False
    edges = [(pts[i], pts[(i + 1) % k]) for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            if j == i + 1 or (i == 0 and j == k - 1):
                # adjacent edges: only a folded-back overlap is a defect
                a, b = edges[i]
                c, e = edges[j]
                if _cross_raw(a, b, c, e):
                    return False
                continue
            if _cross_raw(*edges[i], *edges[j]):
                return False
    return True


@dataclass(frozen=True)
class Polygon:
    """Simple closed polygon; ``orientation`` is +1 for counter-clockwise."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        vs = tuple(Point(Rat(p[0]), Rat(p[1])) for p in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise InvalidPolygon("a polygon needs at least 3 vertices")
        for i in range(len(vs)):
            if vs[i] == vs[(i + 1) % len(vs)]:
                raise InvalidPolygon("consecutive vertices coincide")
        if signed_area2(vs) == 0:
            raise InvalidPolygon("polygon has zero area")
        if not _is_simple(vs):
            raise InvalidPolygon("polygon boundary self-intersects")

    @property
    def orientation(self) -> int:
        return _sign(signed_area2(self.vertices))

    def edges(self) -> list[Segment]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def ccw(self) -> tuple[Point, ...]:
        return self.vertices if self.orientation > 0 else tuple(reversed(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


def _drop_collinear(pts: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in pts:
        if out and out[-1] == p:
            continue
        out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            a, b, c = out[i - 1], out[i], out[(i + 1) % len(out)]
            if orient(a, b, c) == 0:
                del out[i]
                changed = True
                break
    return out


def _clip(poly: list[Point], a: Point, b: Point) -> list[Point]:
    """Keep the part of convex ``poly`` in the closed left half-plane of a->b."""
    out: list[Point] = []
    k = len(poly)
    dx, dy = b[0] - a[0], b[1] - a[1]

    def side(p):
        return dx * (p[1] - a[1]) - dy * (p[0] - a[0])

    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        sp, sq = side(p), side(q)
        if sp >= 0:
            out.append(p)
        if (sp > 0 > sq) or (sp < 0 < sq):
            t = sp / (sp - sq)
            out.append(Point(p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def kernel_vertices(vertices: Sequence[Point]) -> list[Point]:
    """Exact kernel of a simple polygon as a (possibly degenerate) convex
    vertex list in counter-clockwise order; empty if the kernel is empty."""
    vs = list(vertices)
    if signed_area2(vs) < 0:
        vs.reverse()
    xs = [p[0] for p in vs]
    ys = [p[1] for p in vs]
    region = [pt(min(xs), min(ys)), pt(max(xs), min(ys)), pt(max(xs), max(ys)), pt(min(xs), max(ys))]
    k = len(vs)
    for i in range(k):
        region = _clip(region, vs[i], vs[(i + 1) % k])
        if not region:
            return []
    return _drop_collinear(region)


def polygon_kernel(p: Polygon | Sequence[Point]) -> Polygon | None:
    """The kernel of ``p`` as a convex polygon, or ``None`` when the kernel has
    empty interior."""
    vs = p.vertices if isinstance(p, Polygon) else p
    region = kernel_vertices(vs)
    if len(region) < 3 or signed_area2(region) == 0:
        return None
    return Polygon(tuple(region))


def strictly_inside_kernel(q: Point, vertices: Sequence[Point], sign: int | None = None) -> bool:
    """True iff ``q`` is strictly on the inner side of every edge's line.

    ``sign`` is the polygon's orientation when already known.
    """
    vs = vertices if isinstance(vertices, list) else list(vertices)
    s = sign if sign is not None else (1 if signed_area2(vs) > 0 else -1)
    k = len(vs)
    return all(orient(vs[i], vs[(i + 1) % k], q) == s for i in range(k))


def kernel_interior_point(p: Polygon | Sequence[Point]) -> Point:
    """A deterministic exact point strictly inside the kernel of ``p``.

    Returns the vertex average of the kernel polygon.
    """
    vs = p.vertices if isinstance(p, Polygon) else tuple(p)
    ker = polygon_kernel(vs)
    if ker is None:
        raise EmptyKernel("polygon kernel has empty interior")
    kv = ker.vertices
    c = Point(sum(q[0] for q in kv) / len(kv), sum(q[1] for q in kv) / len(kv))
    if strictly_inside_kernel(c, vs):
        return _snap(c, kv, vs)
    # refine towards the middle of the kernel's widest vertex pair
    best = max(
        ((a, b) for i, a in enumerate(kv) for b in kv[i + 1:]),
        key=lambda ab: (ab[0][0] - ab[1][0]) ** 2 + (ab[0][1] - ab[1][1]) ** 2,
    )
    mid = Point((best[0][0] + best[1][0]) / 2, (best[0][1] + best[1][1]) / 2)
    for _ in range(64):
        c = Point((c[0] + mid[0]) / 2, (c[1] + mid[1]) / 2)
        if strictly_inside_kernel(c, vs):
            return c
    raise EmptyKernel("could not certify an interior kernel point")


SNAP_TRIES = 12


def _snap(c: Point, kv: Sequence[Point], vs: Sequence[Point]) -> Point:
    """A point with short dyadic coordinates strictly inside the kernel,
    found by rounding ``c`` to successively finer power-of-two grids.

    Keeps coordinate sizes tied to the kernel's shape instead of to the
    arithmetic history of its vertices.  The grid is never finer than the
    one on which rounding provably stays inside (rounding moves ``c`` by at
    most ``h / sqrt 2`` on a grid of pitch ``h``).
    """
    vs = list(vs)
    sign = 1 if signed_area2(vs) > 0 else -1
    k = len(kv)
    clear = None
    for i in range(k):
        a, b = kv[i], kv[(i + 1) % k]
        cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        r = cr * cr / ((b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2)
        clear = r if clear is None or r < clear else clear
    # finest exponent: h**2 < 2 * clear, with h = 2**lo
    lo = (clear.numerator.bit_length() - clear.denominator.bit_length()) // 2 - 2
    w = max(max(q[0] for q in kv) - min(q[0] for q in kv), max(q[1] for q in kv) - min(q[1] for q in kv))
    hi = w.numerator.bit_length() - w.denominator.bit_length()
    # long thin kernels would otherwise try thousands of hopeless pitches
    hi = min(hi, lo + SNAP_TRIES)
    for e in range(max(hi, lo), lo - 1, -1):
        h = Rat(2) ** e if e >= 0 else Rat(1, 2 ** -e)
        q = Point(Rat(math.floor(c[0] / h + Rat(1, 2))) * h, Rat(math.floor(c[1] / h + Rat(1, 2))) * h)
        if strictly_inside_kernel(q, vs, sign):
            return q
    return c


def is_star_shaped(vertices: Sequence[Point]) -> bool:
    return polygon_kernel(vertices) is not None


def sees_all(q: Point, vertices: Sequence[Point]) -> bool:
    """Visibility check: the segment from ``q`` to every polygon vertex meets
    no boundary edge except at that vertex."""
    vs = list(vertices)
    k = len(vs)
    edges = [(vs[i], vs[(i + 1) % k]) for i in range(k)]
    for v in vs:
        for a, b in edges:
            if v in (a, b):
                if _cross_raw(q, v, a, b):
                    return False
                continue
            if _cross_raw(q, v, a, b):
                return False
    return True


# ---------------------------------------------------------------------------
# x-monotone paths
# ---------------------------------------------------------------------------


def is_x_monotone(pts: Sequence[Point]) -> bool:
    return all(pts[i][0] < pts[i + 1][0] for i in range(len(pts) - 1))


def path_y_at(x: Rat, pts: Sequence[Point]) -> Rat:
    """The y-coordinate of an x-monotone path at abscissa ``x``."""
    if not pts or x < pts[0][0] or x > pts[-1][0]:
        raise OutOfRange(f"x={x} outside the path's x-span")
    lo, hi = 0, len(pts) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pts[mid][0] <= x:
            lo = mid
        else:
            hi = mid
    a, b = pts[lo], pts[hi] if hi != lo else pts[lo]
    if a[0] == x or a == b:
        return a[1]
    if b[0] == x:
        return b[1]
    return a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0])


def below_path(p: Point, pts: Sequence[Point]) -> bool:
    """True iff ``p`` lies vertically below (or on) the x-monotone path."""
    return p[1] <= path_y_at(p[0], pts)


def segment_below_path(a: Point, b: Point, pts: Sequence[Point]) -> bool:
    """True iff every point of segment ab lies below the x-monotone path.

    Both the segment and the path are piecewise linear, so checking the
    segment endpoints and every path vertex within the segment's x-range
    suffices.
    """
    if a[0] > b[0]:
        a, b = b, a
    if not (below_path(a, pts) and below_path(b, pts)):
        return False
    if a[0] == b[0]:
        return True
    for v in pts:
        if a[0] < v[0] < b[0]:
            y = a[1] + (b[1] - a[1]) * (v[0] - a[0]) / (b[0] - a[0])
            if y > v[1]:
                return False
    return True
