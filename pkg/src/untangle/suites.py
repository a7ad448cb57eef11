"""Randomised self-checks behind ``untangle-cli verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .errors import UntangleError
from .geom import _cross_raw, crossing_pairs, is_plane


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "ok" if self.ok else "FAILED"
        return f"{self.name}: {self.cases} cases, {len(self.failures)} failures ({state})"


def _run(name: str, cases, check: Callable) -> SuiteResult:
    res = SuiteResult(name)
    for case in cases:
        res.cases += 1
        try:
            msg = check(case)
        except UntangleError as exc:
            msg = f"{type(exc).__name__}: {exc}"
        if msg:
            res.failures.append(f"{case!r:.60}: {msg}")
    return res


def suite_geom(rng: random.Random, cases: int) -> SuiteResult:
    from .randgen import random_drawing

    def gen():
        for _ in range(cases):
            n = rng.randint(2, 12)
            edges = {tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(1, 2 * n))}
            yield n, sorted(edges), random_drawing(n, rng, grid=6, den=2)

    def check(case):
        n, edges, d = case
        naive = sorted((e, f) for i, e in enumerate(edges) for f in edges[i + 1:]
                       if _cross_raw(d[e[0]], d[e[1]], d[f[0]], d[f[1]]))
        if naive != crossing_pairs(edges, d):
            return "sweep and pairwise crossing lists differ"
        return None

    return _run("geom", gen(), check)


def suite_sigma(qmax: int) -> SuiteResult:
    from .oracles import longest_monotone, max_separated_pair, patience_length, SubseqQuery
    from .worstcase import (
        check_witness, outerplanar_fixed_set, outerplanar_witness, outerplanar_worstcase,
        planar_fixed_set, planar_witness, planar_worstcase, sigma,
    )

    def check(q):
        vals = sigma(q).values
        for direction in ("increasing", "decreasing"):
            if patience_length(vals, direction) != q:
                return f"longest {direction} run is not {q}"
            if longest_monotone(SubseqQuery(vals, direction))[0] != q:
                return f"DP disagrees on {direction}"
            if max_separated_pair(vals, direction) > q + 1:
                return f"separated {direction} pair exceeds {q + 1}"
        if q >= 2 and q <= 10:
            if not check_witness(planar_worstcase(q), planar_witness(q), planar_fixed_set(q)):
                return "planar witness fails"
            if not check_witness(outerplanar_worstcase(q), outerplanar_witness(q), outerplanar_fixed_set(q)):
                return "outerplanar witness fails"
        return None

    return _run("sigma", range(1, qmax + 1), check)


def suite_chords(rng: random.Random, cases: int) -> SuiteResult:
    from .lowering import lower_path_chords, lowering_problems
    from .randgen import random_lowering_instance

    def gen():
        for _ in range(cases):
            yield random_lowering_instance(rng.randint(3, 40), rng)

    def check(case):
        path, pos, spans, cover = case
        state = lower_path_chords(path, pos, spans, cover, verify=False)
        moved = [v for v in path if state.pos[v] != pos[v]]
        if any(v not in cover or state.pos[v].x != pos[v].x or state.pos[v].y > pos[v].y for v in moved):
            return "a vertex moved other than straight down from the cover"
        problems = lowering_problems(state)
        return "; ".join(problems) if problems else None

    return _run("chords", gen(), check)


def suite_starfill(rng: random.Random, cases: int) -> SuiteResult:
    from .randgen import random_disk, random_star_polygon
    from .starfill import RegionTask, _canon, fill_star_polygon

    def gen():
        for _ in range(cases):
            boundary, tris = random_disk(rng.randint(4, 50), rng)
            yield boundary, tris, random_star_polygon(len(boundary), rng)

    def check(case):
        boundary, tris, poly = case
        task = RegionTask(tuple(boundary), frozenset(_canon(t) for t in tris))
        pos = dict(zip(boundary, poly))
        out = fill_star_polygon(task, pos, verify=False)
        if set(out) & set(boundary):
            return "boundary vertex repositioned"
        full = {**pos, **out}
        if not is_plane(sorted(task.edges), full):
            return "filled disk is not plane"
        return None

    return _run("starfill", gen(), check)


def suite_pipeline(rng: random.Random, cases: int) -> SuiteResult:
    from .bounds import general_bound_ceil
    from .pipeline import untangle
    from .randgen import random_drawing, random_triangulation

    def gen():
        for _ in range(cases):
            n = rng.randint(4, 60)
            yield random_triangulation(n, rng), random_drawing(n, rng)

    def check(case):
        g, d = case
        out, rep = untangle(g, d)
        if not is_plane(g, out):
            return "output not plane"
        if rep.fixed_count < general_bound_ceil(g.n):
            return f"fixed {rep.fixed_count} below the bound"
        if any(out[v] != d[v] for v in rep.fixed):
            return "a reported fixed vertex moved"
        return None

    return _run("pipeline", gen(), check)


HARDNESS_FORMULAS = (
    ((3, ((1, 2, 3),)), None),
    ((3, ((1, -2, 3), (-1, 2, -3))), ("above", "below")),
    ((7, ((1, 4, 7), (2, 3, 4), (4, 5, 6))), None),
    ((6, ((1, 2, 3), (4, 5, 6), (-1, -3, -5))), ("above", "above", "below")),
)


def suite_hardness() -> SuiteResult:
    from .gadgets import Formula3SAT, build_instance, default_layout, structural_audit, untangle_with_assignment

    def check(case):
        (nv, clauses), sides = case
        f = Formula3SAT(nv, clauses)
        inst = build_instance(f, default_layout(f, sides))
        structural_audit(inst)
        for vals in product((False, True), repeat=nv):
            a = {i + 1: v for i, v in enumerate(vals)}
            if f.satisfied_by(a):
                d = untangle_with_assignment(inst, a)
                if sum(1 for v in d if d[v] != inst.drawing[v]) != inst.K:
                    return "wrong number of moves"
        return None

    return _run("hardness", HARDNESS_FORMULAS, check)


def run_suite(name: str, seed: int = 0, cases: int | None = None, qmax: int = 12) -> SuiteResult:
    rng = random.Random(seed)
    if name == "geom":
        return suite_geom(rng, cases or 300)
    if name == "sigma":
        return suite_sigma(qmax)
    if name == "chords":
        return suite_chords(rng, cases or 200)
    if name == "starfill":
        return suite_starfill(rng, cases or 100)
    if name == "pipeline":
        return suite_pipeline(rng, cases or 20)
    if name == "hardness":
        return suite_hardness()
    raise ValueError(f"unknown suite {name!r}")


__all__ = ["SuiteResult", "run_suite"]
