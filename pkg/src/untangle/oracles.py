"""Brute-force and dynamic-programming oracles.

Nothing here shares code with the main modules; the property tests compare
the two sides.
"""

from __future__ import annotations

import bisect
import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import TooLarge, VertexMismatch
from .geom import Drawing, Point, Rat, _cross_raw, point_on_open_segment


@dataclass(frozen=True)
class SubseqQuery:
    sequence: tuple
    direction: str = "increasing"

    def __post_init__(self) -> None:
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("elements must be distinct")
        if self.direction not in ("increasing", "decreasing"):
            raise ValueError(f"bad direction {self.direction!r}")


def _oriented(seq: Sequence, direction: str) -> list:
    return list(seq) if direction == "increasing" else [-x for x in seq]


def longest_monotone(sq: SubseqQuery) -> tuple[int, list[int]]:
    """Longest strictly monotone subsequence by quadratic DP; returns its
    length and the indices of a lexicographically first optimal witness
    (smallest last index, then predecessor chain)."""
    a = _oriented(sq.sequence, sq.direction)
    n = len(a)
    if n == 0:
        return 0, []
    best = [1] * n
    prev = [-1] * n
    for j in range(n):
        for i in range(j):
            if a[i] < a[j] and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
                prev[j] = i
    end = max(range(n), key=lambda j: (best[j], -j))
    out = []
    while end != -1:
        out.append(end)
        end = prev[end]
    return len(out), out[::-1]


def patience_length(seq: Sequence, direction: str = "increasing") -> int:
    """Length of the longest strictly monotone subsequence by patience
    sorting."""
    piles: list = []
    for x in _oriented(seq, direction):
        k = bisect.bisect_left(piles, x)
        if k == len(piles):
            piles.append(x)
        else:
            piles[k] = x
    return len(piles)


def _prefix_lengths(vals: Sequence, keep, direction: str) -> list[int]:
    """``out[p]`` is the longest monotone subsequence among the first ``p``
    values that satisfy ``keep``."""
    out = [0]
    piles: list = []
    for x in _oriented(vals, direction):
        if keep(x if direction == "increasing" else -x):
            k = bisect.bisect_left(piles, x)
            if k == len(piles):
                piles.append(x)
            else:
                piles[k] = x
        out.append(len(piles))
    return out


def max_separated_pair(seq: Sequence, direction: str) -> int:
    """Largest ``|S| + |S'|`` over two nonempty subsequences, both monotone
    in ``direction``, such that one lies entirely before the other in the
    sequence and all values of one are below all values of the other.

    For every value threshold the best split position is read off prefix
    and suffix tables of longest monotone lengths.
    """
    vals = list(seq)
    if len(set(vals)) != len(vals):
        raise ValueError("elements must be distinct")
    n = len(vals)
    if n < 2:
        return 0
    back = "decreasing" if direction == "increasing" else "increasing"
    best = 0
    for t in sorted(vals)[:-1]:
        for low_first in (True, False):
            first = (lambda v: v <= t) if low_first else (lambda v: v > t)
            second = (lambda v: v > t) if low_first else (lambda v: v <= t)
            pre = _prefix_lengths(vals, first, direction)
            # a monotone run read backwards is monotone the other way
            suf = _prefix_lengths(vals[::-1], second, back)[::-1]
            for p in range(1, n):
                if pre[p] and suf[p] and pre[p] + suf[p] > best:
                    best = pre[p] + suf[p]
    return best


def max_separated_pair_exhaustive(seq: Sequence, direction: str) -> int:
    """Same value by enumerating every monotone subsequence (n <= 12)."""
    vals = list(seq)
    n = len(vals)
    if n > 12:
        raise TooLarge("exhaustive enumeration limited to 12 elements")
    a = _oriented(vals, direction)
    rank = {v: r for r, v in enumerate(sorted(vals))}
    mono = []
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if all(a[idx[k]] < a[idx[k + 1]] for k in range(len(idx) - 1)):
            rs = [rank[vals[i]] for i in idx]
            mono.append((idx[0], idx[-1], min(rs), max(rs), len(idx)))
    # above[f][m]: largest run starting at index >= f with all ranks >= m
    # below[f][m]: largest run starting at index >= f with all ranks <= m
    above = [[0] * (n + 2) for _ in range(n + 2)]
    below = [[0] * (n + 2) for _ in range(n + 2)]
    for f, _, lo, hi, size in mono:
        above[f][lo] = max(above[f][lo], size)
        below[f][hi] = max(below[f][hi], size)
    for f in range(n, -1, -1):
        for m in range(n, -1, -1):
            above[f][m] = max(above[f][m], above[f + 1][m], above[f][m + 1])
    for f in range(n, -1, -1):
        for m in range(n + 1):
            below[f][m] = max(below[f][m], below[f + 1][m], below[f][m - 1] if m else 0)
    best = 0
    for _, last, lo, hi, size in mono:
        for other in (above[last + 1][hi + 1], below[last + 1][lo - 1] if lo else 0):
            if other and size + other > best:
                best = size + other
    return best


def _lis(seq: Sequence) -> int:
    return longest_monotone(SubseqQuery(tuple(seq), "increasing"))[0]


def _lds(seq: Sequence) -> int:
    return longest_monotone(SubseqQuery(tuple(seq), "decreasing"))[0]


def erdos_szekeres_check(n: int, s: int, r: int, samples: int = 10_000, rng: random.Random | None = None) -> bool:
    """Every permutation of ``n >= s*r + 1`` values has an increasing run
    of ``s+1`` or a decreasing run of ``r+1`` terms.  Exhaustive for
    ``n <= 8``, sampled otherwise."""
    if n < s * r + 1:
        raise ValueError("need n >= s*r + 1")
    if n <= 8:
        perms = itertools.permutations(range(n))
    else:
        rng = rng or random.Random(0)
        perms = (rng.sample(range(n), n) for _ in range(samples))
    return all(_lis(p) >= s + 1 or _lds(p) >= r + 1 for p in perms)


def erdos_szekeres_tight(s: int, r: int) -> list[int]:
    """``r`` increasing blocks of ``s`` values, in decreasing block order:
    no increasing run of ``s+1`` and no decreasing run of ``r+1``."""
    return [b * s + i for b in range(r - 1, -1, -1) for i in range(s)]


def fixed_count(d_before: Mapping[int, Point], d_after: Mapping[int, Point]) -> int:
    """Number of vertices whose positions are identical in both drawings."""
    if set(d_before) != set(d_after):
        raise VertexMismatch("drawings place different vertex sets")
    return sum(1 for v in d_before if d_before[v] == d_after[v])


def shift_distance(d_before: Mapping[int, Point], d_after: Mapping[int, Point]) -> int:
    return len(d_before) - fixed_count(d_before, d_after)


@dataclass
class SmallFixResult:
    """Best drawing found by :func:`small_fix_search`; a lower bound only."""

    lower_bound: int
    fixed: frozenset[int]
    drawing: Drawing
    heuristic: bool = True
    explored: int = 0
    notes: list[str] = field(default_factory=list)


def _grid_points(d: Mapping[int, Point], grid: int) -> list[Point]:
    xs = [p.x for p in d.values()]
    ys = [p.y for p in d.values()]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, y1 - y0, Rat(1))
    if x1 - x0 < w:
        x0 -= (w - (x1 - x0)) / 2
        x1 = x0 + w
    if y1 - y0 < w:
        y0 -= (w - (y1 - y0)) / 2
        y1 = y0 + w
    step_x = (x1 - x0) / (grid - 1)
    step_y = (y1 - y0) / (grid - 1)
    return [Point(x0 + i * step_x, y0 + j * step_y) for i in range(grid) for j in range(grid)]


def _plane_check(edges, pos) -> bool:
    es = [e for e in edges if e[0] in pos and e[1] in pos]
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1:]:
            if _cross_raw(pos[a], pos[b], pos[c], pos[d]):
                return False
    for a, b in es:
        for v, p in pos.items():
            if v != a and v != b and (p == pos[a] or p == pos[b] or point_on_open_segment(p, pos[a], pos[b])):
                return False
    return True


def small_fix_search(g, d: Mapping[int, Point], max_n: int = 8, grid: int = 5,
                     budget: int = 200_000) -> SmallFixResult:
    """Heuristic lower bound on the number of fixable vertices.

    Tries fixed subsets from largest to smallest and, for each, places the
    remaining vertices on a ``grid x grid`` lattice over the bounding box by
    backtracking.  The first plane completion found is returned.
    """
    n = g.n
    if n > max_n:
        raise TooLarge(f"n={n} exceeds max_n={max_n}")
    edges = [tuple(e) for e in g.edges]
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    pts = _grid_points(d, grid)
    explored = 0
    for k in range(n, -1, -1):
        for keep in itertools.combinations(range(n), k):
            pos = {v: d[v] for v in keep}
            if not _plane_check(edges, pos):
                continue
            movers = sorted(set(range(n)) - set(keep), key=lambda v: -len(adj[v]))

            def place(i: int) -> bool:
                nonlocal explored
                if i == len(movers):
                    return True
                v = movers[i]
                for p in pts:
                    explored += 1
                    if explored > budget:
                        return False
                    if p in pos.values() or p == d[v]:
                        continue
                    pos[v] = p
                    if _plane_check(edges, pos) and place(i + 1):
                        return True
                    del pos[v]
                return False

            if place(0):
                return SmallFixResult(k, frozenset(keep), dict(pos), True, explored)
            if explored > budget:
                return SmallFixResult(0, frozenset(), dict(d), True, explored, ["budget exhausted"])
    return SmallFixResult(0, frozenset(), dict(d), True, explored, ["no plane placement on the grid"])


def max_independent_set_bruteforce(vertices: Sequence[int], edges) -> int:
    """Size of a maximum independent set by subset enumeration (at most 20
    vertices)."""
    vs = list(vertices)
    if len(vs) > 20:
        raise TooLarge("brute-force independent set limited to 20 vertices")
    idx = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    for a, b in edges:
        masks[idx[a]] |= 1 << idx[b]
        masks[idx[b]] |= 1 << idx[a]
    best = 0
    for s in range(1 << len(vs)):
        k = bin(s).count("1")
        if k <= best:
            continue
        if all(not (s >> i & 1) or not (masks[i] & s) for i in range(len(vs))):
            best = k
    return best
