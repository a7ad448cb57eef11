"""Worst-case families, their witnesses and the brute-force oracles."""

from __future__ import annotations


import pytest
from hypothesis import given, settings, strategies as st

from untangle import PlanarGraph, pt
from untangle.errors import TooLarge, VertexMismatch
from untangle.geom import is_plane
from untangle.oracles import (
    SubseqQuery, erdos_szekeres_check, erdos_szekeres_tight, fixed_count, longest_monotone,
    max_separated_pair, max_separated_pair_exhaustive, patience_length, small_fix_search,
)
from untangle.worstcase import (
    check_witness, collinear_obstruction, max_unobstructed, outerplanar_fixed_set,
    outerplanar_witness, outerplanar_worstcase, planar_fixed_set, planar_witness,
    planar_worstcase, sigma,
)


@pytest.mark.parametrize("q", range(1, 9))
def test_sigma_is_a_permutation_with_short_monotone_runs(q):
    s = sigma(q)
    assert sorted(s.values) == list(range(q * q))
    assert patience_length(s.values, "increasing") == q
    assert patience_length(s.values, "decreasing") == q


@given(st.lists(st.integers(-50, 50), min_size=0, max_size=30, unique=True))
@settings(max_examples=150, deadline=None)
def test_dp_and_patience_agree(seq):
    for direction in ("increasing", "decreasing"):
        length, idx = longest_monotone(SubseqQuery(tuple(seq), direction))
        assert length == patience_length(seq, direction) == len(idx)
        vals = [seq[i] for i in idx]
        assert vals == (sorted(vals) if direction == "increasing" else sorted(vals, reverse=True))


@given(st.permutations(range(9)))
@settings(max_examples=150, deadline=None)
def test_separated_pair_dp_matches_exhaustive(perm):
    for direction in ("increasing", "decreasing"):
        assert max_separated_pair(perm, direction) == max_separated_pair_exhaustive(perm, direction)


def test_separated_pair_bound_is_attained_on_sigma():
    for q in range(2, 9):
        for direction in ("increasing", "decreasing"):
            assert max_separated_pair(sigma(q).values, direction) == q + 1


def test_exhaustive_oracle_size_limit():
    with pytest.raises(TooLarge):
        max_separated_pair_exhaustive(list(range(13)), "increasing")


def test_erdos_szekeres():
    assert erdos_szekeres_check(7, 2, 3)
    tight = erdos_szekeres_tight(3, 4)
    assert patience_length(tight, "increasing") == 3 and patience_length(tight, "decreasing") == 4


@pytest.mark.parametrize("q", range(3, 8))
def test_planar_witness(q):
    inst = planar_worstcase(q)
    assert inst.graph.n == q * q + 2
    assert check_witness(inst, planar_witness(q), planar_fixed_set(q))


def test_planar_q2_has_no_three_fixable_vertices():
    inst = planar_worstcase(2)
    assert max_unobstructed(inst, 3) == []
    assert collinear_obstruction(inst, frozenset({0, 2, 4}))
    assert check_witness(inst, planar_witness(2), planar_fixed_set(2))


@pytest.mark.parametrize("q", range(2, 8))
def test_outerplanar_witness(q):
    inst = outerplanar_worstcase(q)
    assert inst.graph.n == q * q + 1
    fixed = outerplanar_fixed_set(q)
    assert check_witness(inst, outerplanar_witness(q), fixed)
    assert len(fixed) == 2 * q - 2


def test_fixed_count_requires_same_vertices():
    with pytest.raises(VertexMismatch):
        fixed_count({0: pt(0, 0)}, {1: pt(0, 0)})
    assert fixed_count({0: pt(0, 0), 1: pt(1, 1)}, {0: pt(0, 0), 1: pt(2, 1)}) == 1


def test_small_fix_search_on_crossed_square():
    g = PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    d = {0: pt(0, 0), 1: pt(2, 2), 2: pt(2, 0), 3: pt(0, 2)}
    res = small_fix_search(g, d)
    assert res.lower_bound == 3
    assert is_plane(g, res.drawing)
    assert all(res.drawing[v] == d[v] for v in res.fixed)


def test_small_fix_search_size_limit():
    g = PlanarGraph.from_edges(10, [(i, i + 1) for i in range(9)])
    with pytest.raises(TooLarge):
        small_fix_search(g, {i: pt(i, 0) for i in range(10)})
