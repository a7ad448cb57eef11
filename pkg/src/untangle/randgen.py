"""Random instances for property tests, the verify suites and benchmarks."""

from __future__ import annotations

import random

from .geom import Drawing, Point, Rat
from .graph import PlanarGraph, norm


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> PlanarGraph:
    """A random maximal planar graph on ``n >= 3`` vertices.

    Built by stacking vertices into random faces, then applying random edge
    flips that keep the graph simple and every degree at least 3.  Vertex ids
    are shuffled at the end.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    faces: set[tuple[int, int, int]] = {(0, 1, 2), (0, 2, 1)}
    edges = {(0, 1), (1, 2), (0, 2)}
    for v in range(3, n):
        f = rng.choice(sorted(faces))
        faces.discard(f)
        a, b, c = f
        faces.update({(a, b, v), (b, c, v), (c, a, v)})
        edges.update({norm(a, v), norm(b, v), norm(c, v)})
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    # oriented faces: each directed edge (a, b) belongs to exactly one face
    owner = {}
    for f in faces:
        for i in range(3):
            owner[(f[i], f[(i + 1) % 3])] = f
    for _ in range(flips if flips is not None else 2 * n):
        a, b = rng.choice(sorted(edges))
        f1, f2 = owner[(a, b)], owner[(b, a)]
        c = next(x for x in f1 if x not in (a, b))
        d = next(x for x in f2 if x not in (a, b))
        if c == d or norm(c, d) in edges or deg[a] <= 3 or deg[b] <= 3:
            continue
        # f1 = (a, b, c) as a rotation, f2 = (b, a, d)
        for f in (f1, f2):
            faces.discard(f)
            for i in range(3):
                owner.pop((f[i], f[(i + 1) % 3]), None)
        edges.discard(norm(a, b))
        edges.add(norm(c, d))
        deg[a] -= 1
        deg[b] -= 1
        deg[c] += 1
        deg[d] += 1
        for f in ((c, a, d), (d, b, c)):
            faces.add(f)
            for i in range(3):
                owner[(f[i], f[(i + 1) % 3])] = f
    perm = list(range(n))
    rng.shuffle(perm)
    return PlanarGraph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def random_maximal_outerplanar(n: int, rng: random.Random) -> PlanarGraph:
    """A random triangulated polygon on ``n`` vertices with shuffled labels."""
    if n < 2:
        return PlanarGraph.from_edges(n, [])
    edges = {norm(i, (i + 1) % n) for i in range(n)} if n >= 3 else {(0, 1)}

    def split(poly: list[int]) -> None:
        if len(poly) <= 3:
            return
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        edges.add(norm(poly[a], poly[b]))
        split(poly[a:b + 1])
        split(poly[b:] + poly[:a + 1])

    split(list(range(n)))
    perm = list(range(n))
    rng.shuffle(perm)
    return PlanarGraph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def random_drawing(n: int, rng: random.Random, grid: int = 1000, den: int = 7) -> Drawing:
    """Pairwise distinct random rational points."""
    seen = set()
    out: Drawing = {}
    for v in range(n):
        while True:
            p = Point(Rat(rng.randint(-grid, grid), rng.randint(1, den)),
                      Rat(rng.randint(-grid, grid), rng.randint(1, den)))
            if p not in seen:
                break
        seen.add(p)
        out[v] = p
    return out


def random_laminar_chords(l: int, rng: random.Random, density: float = 0.6) -> list[tuple[int, int]]:
    """Random pairwise nested-or-disjoint spans ``(i, j)`` with ``j >= i + 2``
    on positions ``0..l-1``."""
    out: list[tuple[int, int]] = []

    def fill(lo: int, hi: int) -> None:
        # choose chords inside [lo, hi] recursively
        i = lo
        while i < hi:
            if rng.random() < density and hi - i >= 2:
                j = rng.randint(i + 2, hi)
                out.append((i, j))
                fill(i, j) if rng.random() < 0.8 else None
                i = j
            else:
                i += 1

    fill(0, l - 1)
    # fill() may nest a chord equal to its parent span; drop duplicates
    return sorted(set(out))


def random_lowering_instance(l: int, rng: random.Random, density: float = 0.6):
    """An x-monotone path on ``l >= 3`` positions with random heights,
    laminar chords including the outer span ``(0, l-1)``, and the chord
    cover left by the greedy independent set.  Returns ``(path, pos, spans,
    cover)`` with vertex ids equal to positions."""
    from .graph import ChordGraph, greedy_independent_set

    path = list(range(l))
    xs = sorted(rng.sample(range(-10 * l, 10 * l), l))
    pos = {v: Point(Rat(xs[v]), Rat(rng.randint(-5 * l, 5 * l), rng.randint(1, 4))) for v in path}
    spans = sorted(set(random_laminar_chords(l, rng, density)) | {(0, l - 1)})
    ind = greedy_independent_set(ChordGraph(tuple(path), frozenset(spans)))
    return path, pos, spans, frozenset(path) - frozenset(ind)


def random_star_polygon(k: int, rng: random.Random, spread: int = 1000) -> list[Point]:
    """``k`` vertices in counterclockwise angular order around the origin;
    the origin sees every vertex, so the polygon is star-shaped."""
    import math

    while True:
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
        gaps = [b - a for a, b in zip(angles, angles[1:])] + [angles[0] + 2 * math.pi - angles[-1]]
        if max(gaps) >= math.pi * 0.95:
            continue
        pts = []
        for a in angles:
            r = rng.randint(spread // 5, spread)
            pts.append(Point(Rat(round(r * math.cos(a))), Rat(round(r * math.sin(a)))))
        if len(set(pts)) < k:
            continue
        if all(_turn(Point(Rat(0), Rat(0)), pts[i], pts[(i + 1) % k]) > 0 for i in range(k)):
            return pts


def _turn(o: Point, a: Point, b: Point) -> Rat:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def random_disk(n: int, rng: random.Random, tries: int = 200):
    """A triangulated disk with chordless boundary and at least one interior
    vertex: a random triangulation on ``n + 1`` vertices minus one vertex
    whose link has no chord.  Returns ``(boundary, triangles)`` with the
    disk to the left of the boundary darts."""
    from .graph import planar_embed
    from .starfill import triangles_of

    for _ in range(tries):
        g = planar_embed(random_triangulation(n + 1, rng))
        w = rng.randrange(n + 1)
        link = list(g.rotation[w])
        on = set(link)
        chords = [e for e in g.edges if e[0] in on and e[1] in on
                  and abs(link.index(e[0]) - link.index(e[1])) not in (1, len(link) - 1)]
        if chords or len(link) == n:
            continue
        tris = [t for t in triangles_of(g) if w not in t]
        # relabel densely, dropping w
        ids = {v: i for i, v in enumerate(x for x in range(n + 1) if x != w)}
        # faces around w run (w, x, y) with y following x counterclockwise
        # around the link; the disk is on the other side
        boundary = [ids[v] for v in reversed(link)]
        return boundary, [tuple(ids[v] for v in t) for t in tris]
    raise RuntimeError("no disk with a chordless boundary found")
