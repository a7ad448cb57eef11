"""The eleven acceptance criteria, checked exactly."""

from __future__ import annotations

import math
import random
import time
from itertools import product

from untangle.bounds import general_bound_ceil
from untangle.gadgets import Formula3SAT, build_instance, default_layout, structural_audit, untangle_with_assignment
from untangle.geom import is_plane, polygon_kernel
from untangle.graph import ChordGraph, greedy_independent_set
from untangle.lowering import face_of_chord, lower_path_chords, lowering_problems, pathological_instance
from untangle.oracles import (
    erdos_szekeres_check,
    longest_monotone,
    max_independent_set_bruteforce,
    max_separated_pair,
    SubseqQuery,
)
from untangle.pipeline import untangle, untangle_outerplanar
from untangle.randgen import (
    random_disk,
    random_drawing,
    random_laminar_chords,
    random_lowering_instance,
    random_maximal_outerplanar,
    random_star_polygon,
    random_triangulation,
)
from untangle.starfill import RegionTask, _canon, fill_star_polygon
from untangle.worstcase import (
    fixed_vertices,
    outerplanar_witness,
    outerplanar_worstcase,
    planar_witness,
    planar_worstcase,
    sigma,
)


def test_criterion_01_general_bound(verdict):
    rng = random.Random(101)
    ns = [rng.randint(10, 200) for _ in range(198)] + [200, 200]
    bad, slowest = [], 0.0
    for n in ns:
        g = random_triangulation(n, rng)
        d = random_drawing(n, rng)
        t0 = time.perf_counter()
        out, rep = untangle(g, d)
        dt = time.perf_counter() - t0
        if n == 200:
            slowest = max(slowest, dt)
        kept = sum(1 for v in range(n) if out[v] == d[v])
        if not is_plane(g, out) or kept < general_bound_ceil(n) or kept < rep.fixed_count:
            bad.append(n)
    ok = not bad and slowest < 5.0
    verdict(1, ok, f"{len(ns)} triangulations, failures {bad[:5]}, slowest n=200 run {slowest:.2f}s")
    assert ok


def test_criterion_02_outerplanar_bound(verdict):
    rng = random.Random(202)
    bad = []
    for _ in range(100):
        n = rng.randint(4, 200)
        h = random_maximal_outerplanar(n, rng)
        d = random_drawing(n, rng)
        out, rep = untangle_outerplanar(h, d)
        kept = sum(1 for v in range(n) if out[v] == d[v])
        need = math.isqrt(n // 2)
        while 2 * need * need < n:
            need += 1
        if not is_plane(h, out) or kept < need:
            bad.append(n)
    verdict(2, not bad, f"100 outerplanar graphs, failures {bad[:5]}")
    assert not bad


def test_criterion_03_sigma(verdict):
    bad = []
    for q in range(1, 31):
        vals = sigma(q).values
        for direction in ("increasing", "decreasing"):
            if longest_monotone(SubseqQuery(vals, direction))[0] != q:
                bad.append(("run", q, direction))
    for q in range(1, 13):
        for direction in ("increasing", "decreasing"):
            if max_separated_pair(sigma(q).values, direction) > q + 1:
                bad.append(("pair", q, direction))
    verdict(3, not bad, f"LIS = LDS = q for q <= 30, separated pairs <= q+1 for q <= 12; failures {bad[:5]}")
    assert not bad


def test_criterion_04_planar_witness(verdict):
    bad = []
    for q in range(2, 11):
        inst = planar_worstcase(q)
        d = planar_witness(q)
        want = frozenset([j * q for j in range(q)] + [(q - 1) * q + 2])
        if not is_plane(inst.graph, d) or fixed_vertices(inst.drawing, d) != want:
            bad.append(q)
    verdict(4, not bad, f"q = 2..10, failing q: {bad}")
    assert not bad


def test_criterion_05_outerplanar_witness(verdict):
    bad = []
    for q in range(2, 11):
        inst = outerplanar_worstcase(q)
        d = outerplanar_witness(q)
        want = frozenset(list(range(q)) + [j * q for j in range(2, q)])
        if len(want) != 2 * q - 2 or not is_plane(inst.graph, d) or fixed_vertices(inst.drawing, d) != want:
            bad.append(q)
    verdict(5, not bad, f"q = 2..10, failing q: {bad}")
    assert not bad


def test_criterion_06_chord_lowering(verdict):
    rng = random.Random(606)
    bad = 0
    for _ in range(1000):
        path, pos, spans, cover = random_lowering_instance(rng.randint(3, 40), rng)
        state = lower_path_chords(path, pos, spans, cover, verify=False)
        faces_ok = all(polygon_kernel([state.pos[path[p]] for p in face_of_chord(s, state.processed)]) is not None
                       for s in state.processed)
        if lowering_problems(state) or not faces_ok:
            bad += 1
    verdict(6, bad == 0, f"1000 lowering instances, {bad} failures")
    assert bad == 0


def test_criterion_07_star_fill(verdict):
    rng = random.Random(707)
    bad = 0
    for _ in range(500):
        boundary, tris = random_disk(rng.randint(4, 50), rng)
        poly = random_star_polygon(len(boundary), rng)
        task = RegionTask(tuple(boundary), frozenset(_canon(t) for t in tris))
        pos = dict(zip(boundary, poly))
        out = fill_star_polygon(task, pos, verify=False)
        full = {**pos, **out}
        if any(full[v] != p for v, p in zip(boundary, poly)) or not is_plane(sorted(task.edges), full):
            bad += 1
    verdict(7, bad == 0, f"500 disks, {bad} failures")
    assert bad == 0


def test_criterion_08_coordinate_growth(verdict):
    pos, spans, cover = pathological_instance(9)
    state = lower_path_chords(sorted(pos), pos, spans, cover)
    # w_i is the i-th lowered vertex; its final depth must exceed 2^i i!
    bad = [i for i, (v, y) in enumerate(state.moves, start=1) if not abs(y) > 2 ** i * math.factorial(i)]
    ok = len(state.moves) == 9 and not bad
    verdict(8, ok, f"k = 9, {len(state.moves)} lowered vertices, failing i: {bad}")
    assert ok


FORMULAS = {
    1: (Formula3SAT(3, ((1, 2, 3),)), None),
    2: (Formula3SAT(3, ((1, -2, 3), (-1, 2, -3))), ("above", "below")),
    3: (Formula3SAT(7, ((1, 4, 7), (2, -3, 4), (-4, 5, 6))), None),
}


def test_criterion_09_gadgets(verdict):
    bad = []
    for C, (f, sides) in FORMULAS.items():
        inst = build_instance(f, default_layout(f, sides))
        rep = structural_audit(inst)
        sizes: dict[str, set] = {}
        for gr in inst.gadgets:
            sizes.setdefault(gr.kind, set()).add((len(gr.vertices), len(gr.edges), len(gr.mobile)))
        if rep.crossings != 26 * C or inst.K != 13 * C:
            bad.append((C, "counts"))
        if sizes != {"block": {(28, 28, 4)}, "2-switch": {(15, 14, 1)}, "3-switch": {(23, 18, 1)}}:
            bad.append((C, "gadget sizes"))
        for vals in product((False, True), repeat=f.num_vars):
            a = {i + 1: v for i, v in enumerate(vals)}
            if not f.satisfied_by(a):
                continue
            d = untangle_with_assignment(inst, a)
            moved = sum(1 for v in d if d[v] != inst.drawing[v])
            if moved != 13 * C or not is_plane(inst.graph, d):
                bad.append((C, a))
    verdict(9, not bad, f"C = 1, 2, 3: X = 26C, K = 13C, every model plane; failures {bad[:3]}")
    assert not bad


def test_criterion_10_greedy_independent_set(verdict):
    rng = random.Random(1010)
    bad = []
    for _ in range(1000):
        l = rng.randint(3, 40)
        spans = random_laminar_chords(l, rng)
        cg = ChordGraph(tuple(range(l)), frozenset(spans))
        ind = greedy_independent_set(cg)
        if any((a in ind and b in ind) for a, b in cg.chords) or 2 * len(ind) < l + 1:
            bad.append(l)
        elif l <= 12 and len(ind) > max_independent_set_bruteforce(range(l), cg.chords):
            bad.append(l)
    verdict(10, not bad, f"1000 laminar chord sets, failures {bad[:5]}")
    assert not bad


def test_criterion_11_erdos_szekeres(verdict):
    ok = erdos_szekeres_check(5, 2, 2) and erdos_szekeres_check(10, 3, 3, samples=10_000, rng=random.Random(11))
    verdict(11, ok, "n = 5 exhaustive, n = 10 with 10^4 samples")
    assert ok
