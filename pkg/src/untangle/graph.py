"""Combinatorial plane-graph machinery: embeddings, faces, triangulation,
path chords, greedy independent sets, Schnyder woods and diameters.

Embeddings are rotation systems: ``rotation[v]`` lists the neighbours of ``v``
in counter-clockwise order.  Faces lie to the left of their darts, so the dart
following ``u -> v`` on a face is ``v -> w`` where ``w`` precedes ``u`` in
``rotation[v]``.  The outer face is identified by one of its darts.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    Disconnected,
    NonPlanar,
    NotAPath,
    NotOuterplanar,
    NotTriangulated,
    TooSmall,
)

Edge = tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PlanarGraph:
    n: int
    edges: frozenset[Edge]
    rotation: dict[int, tuple[int, ...]] | None = field(default=None, compare=False)
    outer: Edge | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        es = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            es.add(norm(u, v))
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "PlanarGraph":
        return cls(n, frozenset(norm(int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        if self.rotation is not None:
            return len(self.rotation[v])
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self.edges

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    # -- embedding helpers -------------------------------------------------

    def _require_rotation(self) -> dict[int, tuple[int, ...]]:
        if self.rotation is None:
            raise ValueError("graph has no embedding; call planar_embed first")
        return self.rotation

    def next_dart(self, u: int, v: int) -> Edge:
        rot = self._require_rotation()[v]
        i = rot.index(u)
        return (v, rot[i - 1])

    def faces(self) -> list[list[int]]:
        """Faces as vertex walks (each walk starts at its smallest dart)."""
        seen: set[Edge] = set()
        out = []
        rot = self._require_rotation()
        for u in range(self.n):
            for v in rot[u]:
                if (u, v) in seen:
                    continue
                walk = []
                d = (u, v)
                while d not in seen:
                    seen.add(d)
                    walk.append(d[0])
                    d = self.next_dart(*d)
                out.append(walk)
        return out

    def face_of_dart(self, u: int, v: int) -> list[int]:
        walk = []
        d = (u, v)
        while True:
            walk.append(d[0])
            d = self.next_dart(*d)
            if d == (u, v):
                return walk

    def outer_face(self) -> list[int]:
        if self.outer is None:
            raise ValueError("no outer face selected")
        return self.face_of_dart(*self.outer)

    def with_outer(self, u: int, v: int) -> "PlanarGraph":
        if v not in self._require_rotation()[u]:
            raise ValueError(f"({u}, {v}) is not an edge")
        return PlanarGraph(self.n, self.edges, self.rotation, (u, v))

    def is_triangulated(self) -> bool:
        if self.rotation is None or self.n < 3:
            return False
        return self.m == 3 * self.n - 6 and all(len(f) == 3 for f in self.faces())


def components(g: PlanarGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _nx_graph(n: int, edges: Iterable[Edge]) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h


def planar_embed(g: PlanarGraph) -> PlanarGraph:
    """A rotation system for ``g`` with an outer face selected.

    The outer face defaults to the face of the dart from vertex 0 to its
    first neighbour.
    """
    if g.n > 1 and not g.is_connected():
        raise Disconnected("graph is not connected")
    ok, emb = nx.check_planarity(_nx_graph(g.n, g.edges))
    if not ok:
        raise NonPlanar("graph admits no plane embedding")
    rot = {}
    for v in range(g.n):
        cw = list(emb.neighbors_cw_order(v)) if emb.degree(v) else []
        rot[v] = tuple(reversed(cw))
    outer = (0, rot[0][0]) if g.n > 1 and rot[0] else None
    return PlanarGraph(g.n, g.edges, rot, outer)


def connect_components(g: PlanarGraph) -> tuple[PlanarGraph, list[Edge]]:
    """Join components by bridges between their smallest vertices."""
    comps = components(g)
    bridges = [norm(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
    if not bridges:
        return g, []
    return PlanarGraph(g.n, g.edges | frozenset(bridges)), bridges


def _insert_after(seq: list[int], anchor: int, x: int) -> None:
    seq.insert(seq.index(anchor) + 1, x)


def _insert_before(seq: list[int], anchor: int, x: int) -> None:
    seq.insert(seq.index(anchor), x)


def triangulate(g: PlanarGraph) -> tuple[PlanarGraph, list[Edge]]:
    """Add edges inside faces until every face is a triangle.

    Disconnected inputs are first joined by bridge edges; those bridges are
    reported among the added edges.  The outer face of the result is the face
    containing the input's outer dart when that dart survives.
    """
    if g.n < 3:
        raise TooSmall("triangulation needs at least 3 vertices")
    added: list[Edge] = []
    if g.rotation is None or not g.is_connected():
        g2, bridges = connect_components(g)
        added.extend(bridges)
        outer = g.outer
        g = planar_embed(g2)
        if outer is not None and outer[1] in g.rotation[outer[0]]:
            g = g.with_outer(*outer)
    rot = {v: list(r) for v, r in g.rotation.items()}
    adj = g.adjacency()

    def nxt(u, v):
        r = rot[v]
        return (v, r[r.index(u) - 1])

    def walk_from(d):
        w = []
        start = d
        while True:
            w.append(d)
            d = nxt(*d)
            if d == start:
                return w

    todo = deque()
    seen: set[Edge] = set()
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) not in seen:
                w = walk_from((u, v))
                seen.update(w)
                todo.append((u, v))
    while todo:
        d0 = todo.popleft()
        darts = walk_from(d0)
        k = len(darts)
        if k <= 3:
            continue
        verts = [d[0] for d in darts]
        for i in range(k):
            a, b, c = verts[i], verts[(i + 1) % k], verts[(i + 2) % k]
            if a != c and c not in adj[a]:
                break
        else:
            raise NotTriangulated("no admissible diagonal found in face")
        _insert_after(rot[a], b, c)
        _insert_before(rot[c], b, a)
        adj[a].add(c)
        adj[c].add(a)
        added.append(norm(a, c))
        # the remainder of the face continues along dart a -> c
        todo.append((a, c))
    edges = frozenset(g.edges) | frozenset(added)
    out = PlanarGraph(g.n, edges, {v: tuple(r) for v, r in rot.items()}, g.outer)
    if out.outer is not None and out.outer[1] not in out.rotation[out.outer[0]]:
        out = out.with_outer(0, out.rotation[0][0])
    return out, added


def is_outerplanar(g: PlanarGraph) -> bool:
    apex = g.n
    edges = list(g.edges) + [(v, apex) for v in range(g.n)]
    ok, _ = nx.check_planarity(_nx_graph(g.n + 1, edges))
    return ok


def triangulate_outerplanar_fan(h: PlanarGraph, u: int) -> tuple[PlanarGraph, list[Edge]]:
    """Triangulated supergraph of outerplanar ``h`` in which ``u`` is adjacent
    to every other vertex.

    Joining ``u`` to everything is a minor of ``h`` plus an apex, hence planar.
    """
    if not is_outerplanar(h):
        raise NotOuterplanar("graph is not outerplanar")
    fan = [norm(u, v) for v in range(h.n) if v != u and not h.has_edge(u, v)]
    g = PlanarGraph(h.n, h.edges | frozenset(fan))
    if h.n < 3:
        return g, fan
    tri, more = triangulate(planar_embed(g))
    return tri, fan + more


# ---------------------------------------------------------------------------
# paths and chords
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChordGraph:
    path_vertices: tuple[int, ...]
    chords: frozenset[Edge]

    def __post_init__(self) -> None:
        pos = {v: i for i, v in enumerate(self.path_vertices)}
        cs = set()
        for a, b in self.chords:
            if a not in pos or b not in pos or abs(pos[a] - pos[b]) < 2:
                raise NotAPath(f"({a}, {b}) is not a chord of the path")
            cs.add(norm(a, b))
        object.__setattr__(self, "path_vertices", tuple(self.path_vertices))
        object.__setattr__(self, "chords", frozenset(cs))

    def spans(self) -> list[tuple[int, int]]:
        pos = {v: i for i, v in enumerate(self.path_vertices)}
        return sorted(tuple(sorted((pos[a], pos[b]))) for a, b in self.chords)

    def is_laminar(self) -> bool:
        """Chord spans are pairwise nested or interior-disjoint."""
        sp = self.spans()
        for (a, b), (c, d) in itertools.combinations(sp, 2):
            if a < c < b < d or c < a < d < b:
                return False
        return True


def path_chords(g: PlanarGraph, path: Sequence[int]) -> set[Edge]:
    on = set(path)
    pe = {norm(path[i], path[i + 1]) for i in range(len(path) - 1)}
    return {e for e in g.edges if e[0] in on and e[1] in on and e not in pe}


def _check_path(g: PlanarGraph, path: Sequence[int]) -> None:
    if len(set(path)) != len(path):
        raise NotAPath("path repeats a vertex")
    for i in range(len(path) - 1):
        if not g.has_edge(path[i], path[i + 1]):
            raise NotAPath(f"({path[i]}, {path[i + 1]}) is not an edge")


def side_at(rot: Sequence[int], prev: int, nxt: int, x: int) -> str:
    """'left' if ``x`` lies in the counter-clockwise sweep from ``nxt`` to
    ``prev`` around a path vertex, else 'right'."""
    k = len(rot)
    i = rot.index(nxt)
    for step in range(1, k):
        y = rot[(i + step) % k]
        if y == prev:
            return "right"
        if y == x:
            return "left"
    raise AssertionError("neighbour not found")


def chords_of_path(g: PlanarGraph, path: Sequence[int], apex: int | None = None) -> tuple[set[Edge], set[Edge]]:
    """Split the chords of ``path`` into those left and right of it when the
    path is traversed from its first to its last vertex.

    A chord joining the two path endpoints has no interior endpoint to decide
    its side; it is classified opposite to ``apex`` when an apex whose face
    ``(apex, s, t)`` exists is given, and as right otherwise.
    """
    _check_path(g, path)
    rot = g._require_rotation()
    pos = {v: i for i, v in enumerate(path)}
    left: set[Edge] = set()
    right: set[Edge] = set()
    last = len(path) - 1
    for e in path_chords(g, path):
        a, b = e
        interior = a if 0 < pos[a] < last else (b if 0 < pos[b] < last else None)
        if interior is None:
            side = "right"
            if apex is not None:
                side = _endpoint_side(rot, path, apex)
            (left if side == "left" else right).add(e)
            continue
        other = b if interior == a else a
        i = pos[interior]
        side = side_at(rot[interior], path[i - 1], path[i + 1], other)
        (left if side == "left" else right).add(e)
    return left, right


def _endpoint_side(rot, path, apex) -> str:
    """Side of the chord st, taken as the side opposite the apex's edges at
    interior path vertices (or, when the apex touches none, via s)."""
    for i in range(1, len(path) - 1):
        if apex in rot[path[i]]:
            side = side_at(rot[path[i]], path[i - 1], path[i + 1], apex)
            return "right" if side == "left" else "left"
    # apex adjacent only to s and t: at s the face (apex, s, t) separates them
    s = path[0]
    r = rot[s]
    k = len(r)
    i = r.index(path[1])
    # walking counter-clockwise from w2 at s, the apex comes before t iff the
    # apex is on the left
    for step in range(1, k):
        y = r[(i + step) % k]
        if y == apex:
            return "right"
        if y == path[-1]:
            return "left"
    return "right"


def greedy_independent_set(cg: ChordGraph) -> list[int]:
    """Min-degree greedy independent set in the chord graph.

    Ties are broken by position along the path.  For chords on one side of a
    path this yields at least ``(l + 1) / 2`` vertices.
    """
    order = {v: i for i, v in enumerate(cg.path_vertices)}
    nbrs = {v: set() for v in cg.path_vertices}
    for a, b in cg.chords:
        nbrs[a].add(b)
        nbrs[b].add(a)
    alive = set(cg.path_vertices)
    chosen = []
    while alive:
        v = min(alive, key=lambda x: (len(nbrs[x] & alive), order[x]))
        chosen.append(v)
        alive.discard(v)
        alive -= nbrs[v]
    return chosen


def is_triconnected(g: PlanarGraph) -> bool:
    if g.n < 4:
        raise TooSmall("triconnectivity check needs n >= 4")
    adj = g.adjacency()

    def connected_without(removed: set[int]) -> bool:
        rest = [v for v in range(g.n) if v not in removed]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in removed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(rest)

    if not connected_without(set()):
        return False
    for k in (1, 2):
        for cut in itertools.combinations(range(g.n), k):
            if not connected_without(set(cut)):
                return False
    return True


# ---------------------------------------------------------------------------
# Schnyder woods
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchnyderWood:
    """``parent[k][v]`` is the out-neighbour of inner vertex ``v`` in tree
    ``k`` (0: rooted at s, 1: at t, 2: at u)."""

    roots: tuple[int, int, int]
    parent: tuple[dict[int, int], dict[int, int], dict[int, int]]
    order: tuple[int, ...]

    def path_to_root(self, v: int, k: int) -> list[int]:
        out = [v]
        while out[-1] != self.roots[k]:
            out.append(self.parent[k][out[-1]])
        return out

    def label(self, a: int, b: int) -> tuple[int, int, int] | None:
        """(tree, tail, head) of the interior edge ab, or None for outer edges."""
        for k in range(3):
            if self.parent[k].get(a) == b:
                return (k, a, b)
            if self.parent[k].get(b) == a:
                return (k, b, a)
        return None


def _arc(rot: Sequence[int], start: int, stop: int) -> list[int]:
    """Neighbours strictly between ``start`` and ``stop``, counter-clockwise."""
    k = len(rot)
    i = rot.index(start)
    out = []
    for step in range(1, k):
        y = rot[(i + step) % k]
        if y == stop:
            return out
        out.append(y)
    raise AssertionError("stop not found")


def schnyder_wood(g: PlanarGraph, outer: tuple[int, int, int]) -> SchnyderWood:
    """Schnyder wood of a triangulation with outer face ``(s, t, u)``, computed
    by peeling a canonical ordering from ``u`` downwards."""
    if not g.is_triangulated():
        raise NotTriangulated("schnyder_wood needs a triangulated embedding")
    s, t, u = outer
    if not (g.has_edge(s, t) and g.has_edge(t, u) and g.has_edge(u, s)):
        raise NotTriangulated("(s, t, u) is not a triangle")
    rot = g.rotation
    removed = [False] * g.n
    boundary = [s, u, t]
    on_b = {s, u, t}
    par: tuple[dict[int, int], dict[int, int], dict[int, int]] = ({}, {}, {})
    order = []
    first = True
    while len(boundary) > 2:
        pick = None
        for idx in range(1, len(boundary) - 1):
            v = boundary[idx]
            p, q = boundary[idx - 1], boundary[idx + 1]
            chord = any(w in on_b and w not in (p, q) for w in rot[v])
            if not chord:
                pick = idx
                break
        if pick is None:
            raise NotTriangulated("canonical peeling got stuck")
        v = boundary[pick]
        p, q = boundary[pick - 1], boundary[pick + 1]
        a1 = _arc(rot[v], p, q)
        a2 = list(reversed(_arc(rot[v], q, p)))
        if a1 and all(not removed[w] for w in a1):
            inner = a1
        elif a2 and all(not removed[w] for w in a2):
            inner = a2
        else:
            inner = []
        if not first:
            par[0][v] = p
            par[1][v] = q
        for w in inner:
            par[2][w] = v
        first = False
        removed[v] = True
        on_b.discard(v)
        order.append(v)
        boundary[pick:pick + 1] = inner
        on_b.update(inner)
    if len(order) != g.n - 2:
        raise NotTriangulated("peeling did not reach every vertex")
    return SchnyderWood((s, t, u), par, tuple(reversed(order)))


def audit_schnyder(g: PlanarGraph, wood: SchnyderWood) -> list[str]:
    """Problems found in ``wood``; empty when it is a valid Schnyder wood.

    Checks one outgoing edge per tree at every inner vertex, the cyclic
    out/in pattern, and pairwise-disjoint root paths.
    """
    problems = []
    roots = set(wood.roots)
    inner = [v for v in range(g.n) if v not in roots]
    pattern_dir = None
    for v in inner:
        for k in range(3):
            if v not in wood.parent[k]:
                problems.append(f"vertex {v} lacks an out-edge in tree {k}")
        if len(problems):
            continue
        seq = []
        for w in g.rotation[v]:
            lab = wood.label(v, w)
            if lab is None:
                problems.append(f"edge ({v}, {w}) unlabeled")
                break
            k, tail, _ = lab
            seq.append(("out" if tail == v else "in", k))
        else:
            ok = None
            for direction in ((0, 1, 2), (0, 2, 1)):
                if _pattern_ok(seq, direction):
                    ok = direction
                    break
            if ok is None:
                problems.append(f"vertex {v} violates the local pattern")
            elif pattern_dir is None:
                pattern_dir = ok
            elif pattern_dir != ok:
                problems.append(f"vertex {v} has mirrored pattern")
    if problems:
        return problems
    for v in inner:
        paths = [wood.path_to_root(v, k) for k in range(3)]
        for i, j in ((0, 1), (0, 2), (1, 2)):
            if set(paths[i][1:]) & set(paths[j][1:]):
                problems.append(f"root paths {i},{j} of {v} meet")
    return problems


def _pattern_ok(seq, direction) -> bool:
    """Counter-clockwise around a vertex: out(a), in(c)*, out(b), in(a)*,
    out(c), in(b)* for (a, b, c) = direction."""
    a, b, c = direction
    outs = [i for i, (d, _) in enumerate(seq) if d == "out"]
    if len(outs) != 3:
        return False
    k = len(seq)
    start = next(i for i in outs if seq[i][1] == a)
    rolled = seq[start:] + seq[:start]
    expect_out = [a, b, c]
    expect_in = {a: c, b: a, c: b}
    j = 0
    current = None
    for d, lab in rolled:
        if d == "out":
            if j >= 3 or lab != expect_out[j]:
                return False
            current = lab
            j += 1
        elif lab != expect_in[current]:
            return False
    return j == 3 and k == len(seq)


def bfs_distances(g: PlanarGraph, src: int, adj=None) -> list[int]:
    adj = adj or g.adjacency()
    dist = [-1] * g.n
    dist[src] = 0
    dq = deque([src])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def bfs_diameter(g: PlanarGraph) -> tuple[int, int, int]:
    """Exact diameter by all-pairs BFS, with the lexicographically smallest
    realising pair."""
    adj = g.adjacency()
    best = (-1, 0, 0)
    for s in range(g.n):
        dist = bfs_distances(g, s, adj)
        if min(dist) < 0:
            raise Disconnected("graph is not connected")
        for v in range(s + 1, g.n):
            if dist[v] > best[0]:
                best = (dist[v], s, v)
    if best[0] < 0:
        return (0, 0, 0)
    return best


def shortest_path(g: PlanarGraph, s: int, t: int) -> list[int]:
    adj = g.adjacency()
    prev = {s: None}
    dq = deque([s])
    while dq:
        x = dq.popleft()
        if x == t:
            break
        for y in sorted(adj[x]):
            if y not in prev:
                prev[y] = x
                dq.append(y)
    out = [t]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return out[::-1]
