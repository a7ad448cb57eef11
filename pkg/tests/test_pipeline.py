"""Chord lowering, star-polygon filling and the full untangling pipeline."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from untangle import PlanarGraph, is_plane, pt, untangle, untangle_outerplanar
from untangle.bounds import general_bound_ceil
from untangle.errors import ChordedBoundary, MissingPosition, NonPlanar, NotOuterplanar
from untangle.lowering import (
    LoweringFailure, distinctify, lower_path_chords, lowering_problems, pathological_instance,
)
from untangle.pipeline import parse_report
from untangle.randgen import (
    random_disk, random_drawing, random_lowering_instance, random_maximal_outerplanar,
    random_star_polygon, random_triangulation,
)
from untangle.starfill import RegionTask, _canon, fill_star_polygon


def test_distinctify_round_trip():
    d = {0: pt(0, 0), 1: pt(0, 1), 2: pt(0, 2), 3: pt(1, 5)}
    shear, d2 = distinctify(d)
    assert len({p.x for p in d2.values()}) == 4
    assert {v: shear.invert(p) for v, p in d2.items()} == d


def test_lowering_moves_only_cover_vertices_down():
    rng = random.Random(11)
    for _ in range(80):
        path, pos, spans, cover = random_lowering_instance(rng.randint(3, 30), rng)
        st = lower_path_chords(path, pos, spans, cover)
        assert lowering_problems(st) == []
        for v in path:
            if st.pos[v] != pos[v]:
                assert v in cover and st.pos[v].x == pos[v].x and st.pos[v].y < pos[v].y


def test_lowering_rejects_non_monotone_path():
    pos = {0: pt(0, 0), 1: pt(2, 0), 2: pt(1, 1)}
    with pytest.raises(LoweringFailure):
        lower_path_chords([0, 1, 2], pos, [], set())


def test_pathological_instance_needs_odd_k():
    with pytest.raises(ValueError):
        pathological_instance(2)
    pos, spans, cover = pathological_instance(3)
    assert len(pos) == 7 and len(spans) == 3


def test_fill_random_disks_in_star_polygons():
    rng = random.Random(12)
    for _ in range(40):
        boundary, tris = random_disk(rng.randint(4, 40), rng)
        task = RegionTask(tuple(boundary), frozenset(_canon(t) for t in tris))
        pos = dict(zip(boundary, random_star_polygon(len(boundary), rng)))
        out = fill_star_polygon(task, pos)
        assert not set(out) & set(boundary)
        assert is_plane(sorted(task.edges), {**pos, **out})


def test_fill_rejects_chorded_boundary():
    # square 0-1-2-3 with chord 0-2 and no interior vertex
    task = RegionTask((0, 1, 2, 3), frozenset({_canon((0, 1, 2)), _canon((0, 2, 3))}))
    pos = {0: pt(0, 0), 1: pt(4, 0), 2: pt(4, 4), 3: pt(0, 4)}
    with pytest.raises(ChordedBoundary):
        fill_star_polygon(task, pos)


@pytest.mark.parametrize("strategy", ["auto", "fan", "diameter"])
def test_untangle_random_triangulations(strategy):
    rng = random.Random(13)
    for _ in range(6):
        n = rng.randint(5, 60)
        g = random_triangulation(n, rng)
        d = random_drawing(n, rng)
        out, rep = untangle(g, d, strategy)
        assert is_plane(g, out)
        assert all(out[v] == d[v] for v in rep.fixed)
        assert rep.fixed_count ** 2 >= rep.guarantee.square
        if strategy == "auto":
            assert rep.fixed_count >= general_bound_ceil(n)


def test_untangle_sparse_and_disconnected_inputs():
    rng = random.Random(14)
    g = PlanarGraph.from_edges(9, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (7, 8)])
    d = random_drawing(9, rng)
    out, rep = untangle(g, d)
    assert is_plane(g, out) and rep.fixed_count >= 1


def test_plane_input_is_returned_unchanged():
    g = PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    d = {i: pt(i, i * i) for i in range(4)}
    out, rep = untangle(g, d)
    assert out == d and rep.strategy == "identity" and rep.fixed_count == 4


def test_untangle_rejects_bad_inputs():
    k5 = PlanarGraph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    with pytest.raises(NonPlanar):
        untangle(k5, {i: pt(i, i * i) for i in range(5)})
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(MissingPosition):
        untangle(g, {0: pt(0, 0), 1: pt(1, 0)})


def test_outerplanar_variant():
    rng = random.Random(15)
    for _ in range(10):
        n = rng.randint(5, 50)
        h = random_maximal_outerplanar(n, rng)
        d = random_drawing(n, rng)
        out, rep = untangle_outerplanar(h, d)
        assert is_plane(h, out)
        assert 2 * rep.fixed_count ** 2 >= n
    with pytest.raises(NotOuterplanar):
        k4 = PlanarGraph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        untangle_outerplanar(k4, random_drawing(4, rng))


def test_report_text_round_trip():
    rng = random.Random(16)
    g = random_triangulation(20, rng)
    _, rep = untangle(g, random_drawing(20, rng))
    parsed = parse_report(rep.to_text())
    assert int(parsed["fixed_count"]) == rep.fixed_count
    assert int(parsed["n"]) == int(parsed["fixed_count"]) + int(parsed["moved_count"])
    square = Fraction(int(parsed["guarantee_num"]), int(parsed["guarantee_den_sq"]))
    assert square == rep.guarantee.square
    assert rep.fixed_count ** 2 >= square
