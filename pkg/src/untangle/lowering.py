"""Making the path x-monotone and pulling its chords below it.

``monotone_fix`` keeps a longest monotone run of independent-set vertices in
place and spreads the other path vertices between them.  ``lower_chords``
then moves cover vertices straight down, innermost chord first, until every
chord lies below the path and each face bounded by a chord is star-shaped.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import CoverViolation, DuplicatePoints, UntangleError
from .geom import (
    Drawing,
    Point,
    Rat,
    _cross_raw,
    is_x_monotone,
    kernel_interior_point,
    polygon_kernel,
    segment_below_path,
    to_integer_grid,
)


class LoweringFailure(UntangleError):
    """A lowering postcondition failed; indicates a defect, not bad input."""


@dataclass(frozen=True)
class ShearTransform:
    """``(x, y) -> (x + epsilon * y, y)``."""

    epsilon: Rat

    def apply(self, p: Point) -> Point:
        return Point(p.x + self.epsilon * p.y, p.y)

    def invert(self, p: Point) -> Point:
        return Point(p.x - self.epsilon * p.y, p.y)

    def apply_all(self, d: Mapping[int, Point]) -> Drawing:
        if not self.epsilon:
            return dict(d)
        return {v: self.apply(p) for v, p in d.items()}

    def invert_all(self, d: Mapping[int, Point]) -> Drawing:
        if not self.epsilon:
            return dict(d)
        return {v: self.invert(p) for v, p in d.items()}


def distinctify(d0: Mapping[int, Point]) -> tuple[ShearTransform, Drawing]:
    """Shear so that all x-coordinates become pairwise distinct.

    The shear coefficient is half the smallest ``|dx/dy|`` over pairs with
    both differences nonzero (1 if there are none), so no pair can collide.
    """
    pts = list(d0.values())
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("two vertices share a position")
    xs = [p.x for p in pts]
    if len(set(xs)) == len(xs):
        return ShearTransform(Rat(0)), dict(d0)
    best = None
    for i in range(len(pts)):
        a = pts[i]
        for b in pts[i + 1:]:
            dx, dy = a.x - b.x, a.y - b.y
            if dx and dy:
                r = abs(dx / dy)
                if best is None or r < best:
                    best = r
    eps = Rat(1) if best is None else best / 2
    sh = ShearTransform(eps)
    out = sh.apply_all(d0)
    assert len({p.x for p in out.values()}) == len(out)
    return sh, out


# ---------------------------------------------------------------------------
# step 1: x-monotone path
# ---------------------------------------------------------------------------


def _longest_increasing(values: Sequence) -> list[int]:
    """Indices of a longest strictly increasing subsequence (patience sort)."""
    tails: list = []
    tail_idx: list[int] = []
    prev = [-1] * len(values)
    for i, x in enumerate(values):
        k = bisect.bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
            tail_idx.append(i)
        else:
            tails[k] = x
            tail_idx[k] = i
        prev[i] = tail_idx[k - 1] if k else -1
    out = []
    i = tail_idx[-1] if tail_idx else -1
    while i >= 0:
        out.append(i)
        i = prev[i]
    return out[::-1]


def spread_path(path: Sequence[int], fixed: Mapping[int, Point]) -> Drawing:
    """Positions for ``path`` keeping ``fixed`` vertices and giving every other
    vertex an x strictly between its fixed neighbours along the path (evenly
    spaced) and y = 0.  Fixed x-coordinates must increase along the path."""
    anchors = [i for i, v in enumerate(path) if v in fixed]
    out: Drawing = {}
    if not anchors:
        for i, v in enumerate(path):
            out[v] = Point(Rat(i), Rat(0))
        return out
    for i in anchors:
        out[path[i]] = fixed[path[i]]
    first, last = anchors[0], anchors[-1]
    for i in range(first):
        out[path[i]] = Point(fixed[path[first]].x - (first - i), Rat(0))
    for i in range(last + 1, len(path)):
        out[path[i]] = Point(fixed[path[last]].x + (i - last), Rat(0))
    for a, b in zip(anchors, anchors[1:]):
        xa, xb = fixed[path[a]].x, fixed[path[b]].x
        gap = b - a
        for i in range(a + 1, b):
            out[path[i]] = Point(xa + (xb - xa) * (i - a) / gap, Rat(0))
    return out


def monotone_fix(d: Mapping[int, Point], pd):
    """Fix a longest monotone subsequence of the independent set.

    Returns ``(F, d1, pd1)``: the fixed vertex set, the drawing with an
    x-monotone path, and the decomposition, reversed when the decreasing
    direction won so that the path always runs left to right.
    """
    ind = [v for v in pd.path if v in pd.independent_set]
    xs = [d[v].x for v in ind]
    inc = _longest_increasing(xs)
    dec = _longest_increasing([-x for x in xs])
    if len(dec) > len(inc):
        pd = pd.reversed()
        ind = ind[::-1]
        chosen = [ind[len(ind) - 1 - i] for i in dec][::-1]
    else:
        chosen = [ind[i] for i in inc]
    fixed = {v: d[v] for v in chosen}
    placed = spread_path(pd.path, fixed)
    d1 = dict(d)
    d1.update(placed)
    assert is_x_monotone([d1[v] for v in pd.path])
    return frozenset(chosen), d1, pd


# ---------------------------------------------------------------------------
# step 2: chord lowering
# ---------------------------------------------------------------------------


@dataclass
class LoweringState:
    """Progress of the lowering procedure over one x-monotone path."""

    path: list[int]
    pos: dict[int, Point]
    processed: list[tuple[int, int]] = field(default_factory=list)
    faces: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    witnesses: dict[tuple[int, int], Point] = field(default_factory=dict)
    moves: list[tuple[int, Rat]] = field(default_factory=list)
    extra_doublings: int = 0

    @property
    def r_x(self) -> Rat:
        xs = [self.pos[v].x for v in self.path]
        gaps = [b - a for a, b in zip(xs, xs[1:])]
        return (xs[-1] - xs[0]) / min(gaps)

    @property
    def y_floor(self) -> Rat:
        return min(self.pos[v].y for v in self.path)


def chord_order(spans: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Innermost first: by span length, then by left endpoint."""
    return sorted(spans, key=lambda s: (s[1] - s[0], s[0]))


def face_of_chord(span: tuple[int, int], processed_spans: Sequence[tuple[int, int]]) -> list[int]:
    """Path positions on the face closed by ``span``: walk from its left end
    to its right end, jumping over maximal processed sub-chords."""
    i, j = span
    jumps: dict[int, int] = {}
    for a, b in processed_spans:
        if i <= a and b <= j and (a, b) != (i, j):
            if b > jumps.get(a, a):
                jumps[a] = b
    out = [i]
    p = i
    while p < j:
        q = jumps.get(p, p + 1)
        if q > j:
            q = p + 1
        out.append(q)
        p = q
    return out


def _pick_endpoint(span, spans_left, cover_pos) -> int:
    i, j = span
    cands = [p for p in (i, j) if p in cover_pos]
    if not cands:
        raise CoverViolation(f"chord at path positions {span} has no endpoint in the cover")
    if len(cands) == 1:
        return cands[0]

    def inside(p):
        return sum(1 for a, b in spans_left if a < p < b)

    return min(cands, key=lambda p: (inside(p), p))


def _segments_near(state: LoweringState, lo: Rat, hi: Rat):
    segs = []
    path = state.path
    for a, b in zip(path, path[1:]):
        segs.append((a, b))
    for i, j in state.processed:
        segs.append((path[i], path[j]))
    out = []
    for a, b in segs:
        pa, pb = state.pos[a], state.pos[b]
        if max(pa.x, pb.x) < lo or min(pa.x, pb.x) > hi:
            continue
        out.append((a, b))
    return out


def _step_ok(state: LoweringState, span, v_pos: int) -> bool:
    path = state.path
    pts = [state.pos[v] for v in path]
    i, j = span
    a, b = state.pos[path[i]], state.pos[path[j]]
    if not segment_below_path(a, b, pts):
        return False
    face = face_of_chord(span, state.processed)
    if polygon_kernel([state.pos[path[p]] for p in face]) is None:
        return False
    # new chord and the moved vertex's path edges against every nearby segment
    v = path[v_pos]
    touched = [(path[i], path[j])]
    if v_pos > 0:
        touched.append((path[v_pos - 1], v))
    if v_pos < len(path) - 1:
        touched.append((v, path[v_pos + 1]))
    xs = [state.pos[x].x for e in touched for x in e]
    near = _segments_near(state, min(xs), max(xs))
    grid = to_integer_grid(state.pos, {x for e in touched + near for x in e})
    for e in touched:
        for f in near:
            if set(e) == set(f):
                continue
            if _cross_raw(grid[e[0]], grid[e[1]], grid[f[0]], grid[f[1]]):
                return False
    return True


def lower_path_chords(path: Sequence[int], pos: Mapping[int, Point], spans: Sequence[tuple[int, int]],
                      cover: set[int] | frozenset[int], verify: bool = True) -> LoweringState:
    """Lower cover vertices so that all chords (given as path-position spans,
    pairwise nested or disjoint) lie below the x-monotone path.

    Only cover vertices move, each straight down.  The target for each move is
    ``2 * R_x * y_floor`` in a frame where every path vertex has negative y;
    the result is verified and the depth doubled if a check fails.
    """
    path = list(path)
    state = LoweringState(path, {v: pos[v] for v in path})
    if not is_x_monotone([state.pos[v] for v in path]):
        raise LoweringFailure("path is not x-monotone")
    cover_pos = {i for i, v in enumerate(path) if v in cover}
    order = chord_order([tuple(sorted(s)) for s in spans])
    for k, span in enumerate(order):
        p = _pick_endpoint(span, order[k + 1:], cover_pos)
        v = path[p]
        shift = max(state.pos[w].y for w in path) + 1
        floor = state.y_floor - shift
        target = 2 * state.r_x * floor
        state.processed.append(span)
        old = state.pos[v]
        tries = 0
        while True:
            y = target + shift
            state.pos[v] = Point(old.x, min(y, old.y))
            if _step_ok(state, span, p):
                break
            tries += 1
            if tries > 256:
                raise LoweringFailure(f"could not lower vertex {v} for chord {span}")
            target *= 2
        state.extra_doublings += tries
        state.moves.append((v, state.pos[v].y))
        face = face_of_chord(span, state.processed)
        state.faces[span] = face
        state.witnesses[span] = kernel_interior_point([state.pos[path[q]] for q in face])
    if verify:
        problems = lowering_problems(state)
        if problems:
            raise LoweringFailure("; ".join(problems[:3]))
    return state


def lowering_problems(state: LoweringState) -> list[str]:
    """Global postcondition check: plane, chords below, faces star-shaped."""
    path = state.path
    pts = [state.pos[v] for v in path]
    out = []
    if not is_x_monotone(pts):
        out.append("path not x-monotone")
    segs = [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    segs += [(path[i], path[j]) for i, j in state.processed]
    for i, j in state.processed:
        if not segment_below_path(state.pos[path[i]], state.pos[path[j]], pts):
            out.append(f"chord {(i, j)} not below the path")
    from .geom import crossing_pairs

    if crossing_pairs(segs, state.pos):
        out.append("chord drawing not plane")
    for span, face in state.faces.items():
        if polygon_kernel([state.pos[path[q]] for q in face]) is None:
            out.append(f"face of {span} not star-shaped")
    return out


def lower_chords(d1: Mapping[int, Point], pd) -> tuple[Drawing, LoweringState]:
    """Run the lowering on a decomposition whose path is x-monotone in ``d1``."""
    path = list(pd.path)
    idx = {v: i for i, v in enumerate(path)}
    spans = [tuple(sorted((idx[a], idx[b]))) for a, b in pd.chords]
    state = lower_path_chords(path, d1, spans, pd.cover)
    d2 = dict(d1)
    d2.update(state.pos)
    return d2, state


def pathological_instance(k: int):
    """The path on ``n = 2k + 1`` vertices that forces super-factorial
    y-coordinates: ``v_i = (i, 0)`` except ``v_{k+1} = (k+1, -1)``, chords
    ``v_i v_{n+1-i}`` for ``i <= k`` and the prescribed cover.

    Vertex ``v_i`` has id ``i - 1``.  Returns ``(positions, spans, cover)``
    with spans as 0-based path positions.
    """
    if k <= 0 or k % 2 == 0:
        raise ValueError("k must be a positive odd integer")
    n = 2 * k + 1
    pos = {i - 1: Point(Rat(i), Rat(-1 if i == k + 1 else 0)) for i in range(1, n + 1)}
    spans = [(i - 1, n - i) for i in range(1, k + 1)]
    cover_idx = list(range(2, k, 2)) + list(range(k + 2, n - 1, 2)) + [n]
    cover = frozenset(i - 1 for i in cover_idx)
    return pos, spans, cover
