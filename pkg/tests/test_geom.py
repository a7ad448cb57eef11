"""Exact predicates, crossings and kernels against direct references."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from untangle.errors import InvalidPolygon
from untangle.geom import (
    Polygon, Rat, _cross_raw, crossing_pairs, format_rat, is_plane, is_star_shaped,
    kernel_interior_point, orient, parse_rat, polygon_kernel, pt, segments_cross,
    strictly_inside_kernel,
)
from untangle.randgen import random_drawing

coord = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def test_orient_signs():
    assert orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1
    assert orient(pt(0, 0), pt(1, 1), pt(3, 3)) == 0


def test_orient_is_exact_for_tiny_offsets():
    eps = Rat(1, 10**40)
    assert orient(pt(0, 0), pt(1, 1), Point2(2, 2 + eps)) == 1


def Point2(x, y):
    return pt(Rat(x), Rat(y))


@given(coord, coord, coord, coord, coord, coord)
@settings(max_examples=200, deadline=None)
def test_orient_matches_fraction_determinant(ax, ay, bx, by, cx, cy):
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    expect = (det > 0) - (det < 0)
    assert orient(pt(ax, ay), pt(bx, by), pt(cx, cy)) == expect


def test_shared_endpoint_is_not_a_crossing():
    assert not _cross_raw(pt(0, 0), pt(1, 1), pt(0, 0), pt(1, -1))


def test_touching_and_overlap_count_as_crossings():
    assert _cross_raw(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5))
    assert _cross_raw(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0))
    assert segments_cross((pt(0, 0), pt(2, 2)), (pt(0, 2), pt(2, 0)))


def test_sweep_matches_pairwise_reference():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(2, 14)
        edges = sorted({tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(1, 3 * n))})
        d = random_drawing(n, rng, grid=5, den=2)
        naive = sorted((e, f) for i, e in enumerate(edges) for f in edges[i + 1:]
                       if _cross_raw(d[e[0]], d[e[1]], d[f[0]], d[f[1]]))
        assert crossing_pairs(edges, d) == naive


def test_is_plane_square_with_diagonals():
    d = {0: pt(0, 0), 1: pt(1, 0), 2: pt(1, 1), 3: pt(0, 1)}
    assert is_plane([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], d)
    assert not is_plane([(0, 2), (1, 3)], d)


@given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6))
def test_rational_text_round_trip(x):
    r = Rat(x.numerator, x.denominator)
    assert parse_rat(format_rat(r)) == r
    assert Fraction(format_rat(r)) == x


def test_kernel_of_convex_polygon_is_itself():
    sq = [pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]
    k = polygon_kernel(sq)
    assert k is not None and set(k.ccw()) == set(sq)
    q = kernel_interior_point(sq)
    assert strictly_inside_kernel(q, sq)


def test_self_touching_outline_rejected():
    z = [pt(0, 0), pt(6, 0), pt(6, 1), pt(1, 1), pt(1, 2), pt(6, 2), pt(6, 3),
         pt(0, 3), pt(0, 2), pt(5, 2), pt(5, 1), pt(0, 1)]
    with pytest.raises(InvalidPolygon):
        Polygon(tuple(z))


def test_comb_is_not_star_shaped():
    comb = [pt(0, 0), pt(9, 0), pt(9, 5), pt(8, 5), pt(8, 1), pt(1, 1), pt(1, 5), pt(0, 5)]
    assert not is_star_shaped(comb)


def test_star_polygon_kernel_point_sees_everything():
    rng = random.Random(3)
    from untangle.randgen import random_star_polygon
    for _ in range(40):
        poly = random_star_polygon(rng.randint(3, 25), rng)
        assert is_star_shaped(poly)
        q = kernel_interior_point(poly)
        assert strictly_inside_kernel(q, poly)
