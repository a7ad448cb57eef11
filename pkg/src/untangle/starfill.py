"""Placing the apex and filling star-shaped regions.

After lowering, the path, its chords, the edge ``st`` and the apex edges cut
the triangle ``u s t`` into star-shaped polygons.  Each polygon receives a
triangulated disk whose boundary is chordless.  ``fill_star_polygon`` draws
such a disk by putting one interior vertex at an exact kernel point, fanning
its boundary edges out from there and recursing on the pieces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ChordedBoundary, FillFailure
from .geom import (
    Drawing,
    _cross_raw,
    Point,
    Rat,
    crossing_pairs,
    kernel_interior_point,
    strictly_inside_kernel,
    to_integer_grid,
    vertex_edge_incidences,
)
from .graph import PlanarGraph, norm

Triangle = tuple[int, int, int]


def _canon(t: Sequence[int]) -> Triangle:
    i = min(range(3), key=lambda k: t[k])
    return (t[i], t[(i + 1) % 3], t[(i + 2) % 3])


def triangles_of(g: PlanarGraph) -> list[Triangle]:
    """Oriented faces of a triangulated embedding (each to the left of its
    darts)."""
    return [_canon(f) for f in g.faces() if len(f) == 3]


def dart_map(tris: Sequence[Triangle]) -> dict[tuple[int, int], Triangle]:
    out = {}
    for t in tris:
        for i in range(3):
            out[(t[i], t[(i + 1) % 3])] = t
    return out


def flood(start: Triangle, darts: Mapping[tuple[int, int], Triangle], walls: set[tuple[int, int]]) -> set[Triangle]:
    """Triangles reachable from ``start`` without crossing a wall edge."""
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for i in range(3):
            a, b = t[i], t[(i + 1) % 3]
            if norm(a, b) in walls:
                continue
            nb = darts.get((b, a))
            if nb is not None and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def cycle_walls(cycle: Sequence[int]) -> set[tuple[int, int]]:
    k = len(cycle)
    return {norm(cycle[i], cycle[(i + 1) % k]) for i in range(k)}


@dataclass(frozen=True)
class RegionTask:
    """A triangulated disk to be drawn inside a fixed star-shaped polygon.

    ``boundary`` is oriented so that the disk lies to the left of each
    boundary dart in the embedding.
    """

    boundary: tuple[int, ...]
    triangles: frozenset[Triangle]
    kind: str = ""

    @property
    def vertices(self) -> set[int]:
        return {v for t in self.triangles for v in t}

    @property
    def interior_vertices(self) -> frozenset[int]:
        return frozenset(self.vertices - set(self.boundary))

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {norm(t[i], t[(i + 1) % 3]) for t in self.triangles for i in range(3)}

    def boundary_chords(self) -> set[tuple[int, int]]:
        on = set(self.boundary)
        walls = cycle_walls(self.boundary)
        return {e for e in self.edges if e[0] in on and e[1] in on and e not in walls}


# ---------------------------------------------------------------------------
# apex
# ---------------------------------------------------------------------------


def apex_height(path_pts: Sequence[Point], x: Rat) -> Rat:
    """Maximum over all lines through two path vertices (and the vertices
    themselves) of their height at abscissa ``x``."""
    best = max(p.y for p in path_pts)
    k = len(path_pts)
    for i in range(k):
        a = path_pts[i]
        for j in range(i + 1, k):
            b = path_pts[j]
            y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)
            if y > best:
                best = y
    return best


def place_apex(d2: Mapping[int, Point], pd) -> Drawing:
    """Put the apex above every line through two path vertices, at the
    midpoint abscissa of ``s`` and ``t``; it then sees the whole path."""
    pts = [d2[v] for v in pd.path]
    x = (pts[0].x + pts[-1].x) / 2
    y = Rat(math.floor(apex_height(pts, x)) + 1)
    d3 = dict(d2)
    d3[pd.apex] = Point(x, y)
    return d3


def apex_sees_path(d: Mapping[int, Point], pd) -> bool:
    """Exhaustive check: no apex-to-path segment crosses a path edge."""
    path = pd.path
    grid = to_integer_grid(d, [pd.apex, *path])
    u = grid[pd.apex]
    for w in path:
        for a, b in zip(path, path[1:]):
            if _cross_raw(u, grid[w], grid[a], grid[b]):
                return False
    return True


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------


def _region(cycle: list[int], darts, outer_tri: Triangle, kind: str) -> RegionTask:
    walls = cycle_walls(cycle)
    start = darts[(cycle[0], cycle[1])]
    tris = flood(start, darts, walls)
    if outer_tri in tris:
        cycle = [cycle[0]] + cycle[1:][::-1]
        start = darts[(cycle[0], cycle[1])]
        tris = flood(start, darts, walls)
        if outer_tri in tris:
            raise ChordedBoundary(f"cycle {cycle} does not bound a region")
    task = RegionTask(tuple(cycle), frozenset(tris), kind)
    chords = task.boundary_chords()
    if chords:
        raise ChordedBoundary(f"region boundary {cycle} has chords {sorted(chords)}")
    return task


def decompose_regions(g: PlanarGraph, pd, state=None) -> list[RegionTask]:
    """One task per bounded face of the drawing of path, chords, ``st`` and
    apex edges: upper tasks between consecutive apex neighbours on the path,
    lower tasks closed by each chord."""
    from .lowering import chord_order, face_of_chord

    tris = triangles_of(g)
    darts = dart_map(tris)
    outer_tri = darts[g.outer]
    path = list(pd.path)
    idx = {v: i for i, v in enumerate(path)}
    tasks = []
    up = [i for i, v in enumerate(path) if g.has_edge(pd.apex, v)]
    for a, b in zip(up, up[1:]):
        tasks.append(_region([pd.apex] + path[a:b + 1], darts, outer_tri, "upper"))
    spans = chord_order([tuple(sorted((idx[a], idx[b]))) for a, b in pd.chords])
    done = []
    for span in spans:
        done.append(span)
        face = face_of_chord(span, done)
        tasks.append(_region([path[p] for p in face], darts, outer_tri, "lower"))
    return tasks


# ---------------------------------------------------------------------------
# filling
# ---------------------------------------------------------------------------


def fill_star_polygon(task: RegionTask, pos: Mapping[int, Point], verify: bool = True) -> Drawing:
    """Positions for the interior vertices of ``task`` given its boundary
    positions.  The combined drawing is checked to be plane."""
    out: Drawing = {}
    work: dict[int, Point] = {v: pos[v] for v in task.boundary}
    stack = [(list(task.boundary), set(task.triangles))]
    while stack:
        boundary, tris = stack.pop()
        on = set(boundary)
        interior = {v for t in tris for v in t} - on
        if not interior:
            if len(tris) != 1 or len(boundary) != 3:
                raise ChordedBoundary(f"empty region {boundary} is not a triangle")
            continue
        darts = dart_map(list(tris))
        a, b = boundary[0], boundary[1]
        t = darts[(a, b)]
        w = next(v for v in t if v not in (a, b))
        if w in on:
            raise ChordedBoundary(f"boundary {boundary} has chord at {w}")
        poly = [work[v] for v in boundary]
        kappa = kernel_interior_point(poly)
        work[w] = kappa
        out[w] = kappa
        nbrs = {x for (p, q) in darts if p == w for x in (q,)}
        stops = [i for i, v in enumerate(boundary) if v in nbrs]
        k = len(boundary)
        for j, i0 in enumerate(stops):
            i1 = stops[(j + 1) % len(stops)]
            chain = [boundary[i0]]
            i = i0
            while i != i1:
                i = (i + 1) % k
                chain.append(boundary[i])
            sub = [w] + chain
            start = darts[(chain[0], chain[1])]
            stack.append((sub, flood(start, darts, cycle_walls(sub))))
    if verify:
        full = dict(work)
        problems = _task_problems(task, full)
        if problems:
            raise FillFailure("; ".join(problems))
    return out


def _task_problems(task: RegionTask, full: Mapping[int, Point]) -> list[str]:
    sub = sorted(task.edges)
    out = []
    if crossing_pairs(sub, full):
        out.append(f"crossings in region {task.boundary[:4]}...")
    if vertex_edge_incidences(sub, full):
        out.append(f"vertex on edge in region {task.boundary[:4]}...")
    return out


def untangle_assemble(g: PlanarGraph, tasks: Sequence[RegionTask], d: Mapping[int, Point],
                      verify_each: bool = True) -> Drawing:
    """Fill every task and merge the positions into ``d``."""
    final = dict(d)
    for task in tasks:
        final.update(fill_star_polygon(task, final, verify=verify_each))
    return final


def kernel_witness_ok(task: RegionTask, pos: Mapping[int, Point], q: Point) -> bool:
    return strictly_inside_kernel(q, [pos[v] for v in task.boundary])
