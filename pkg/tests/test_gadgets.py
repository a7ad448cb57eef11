"""3-SAT formulas, comb layouts and hardness instances."""

from __future__ import annotations

import dataclasses
from itertools import product

import pytest

from untangle.errors import AuditFailure, LayoutInconsistent, ParseError, Unsatisfied
from untangle.gadgets import (
    COUNTS, CombLayout, Formula3SAT, build_instance, check_layout, clause_audit, default_layout,
    parse_formula, parse_layout, pressure_audit, structural_audit, untangle_with_assignment,
)
from untangle.geom import Point, Rat, crossing_pairs, is_plane

SIMPLE = Formula3SAT(3, ((1, -2, 3),))


def test_formula_text_round_trip():
    f = Formula3SAT(5, ((1, -2, 3), (-3, 4, 5)))
    assert parse_formula(f.to_text()) == f


@pytest.mark.parametrize("text", [
    "1 2 3\n",
    "p cnf3 3 1\n1 2\n",
    "p cnf3 3 1\n1 2 x\n",
    "p cnf3 3 2\n1 2 3\n",
    "p cnf3 3 1\n1 2 4\n",
    "p cnf3 3 1\n1 -1 2\n",
    "p cnf 3 1\n1 2 3\n",
])
def test_bad_formulas_raise_parse_error(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_formula_accepts_comments_and_trailing_zero():
    f = parse_formula("c example\np cnf3 3 1\n1 -2 3 0\n")
    assert f.clauses == ((1, -2, 3),)


def test_layout_text_round_trip():
    f = Formula3SAT(6, ((1, 2, 3), (4, 5, 6), (-1, -3, -5)))
    lay = default_layout(f, ("above", "above", "below"))
    assert parse_layout(lay.to_text(), f) == lay


@pytest.mark.parametrize("text", ["l 1 above\n", "l 1 left 1\n", "l 1 above 0\n", "l 2 above 1\n",
                                  "l 1 above 1\nl 1 below 1\n", "x\n"])
def test_bad_layouts_raise_parse_error(text):
    with pytest.raises(ParseError):
        parse_layout(text, SIMPLE)


def test_interleaving_clauses_rejected():
    f = Formula3SAT(4, ((1, 2, 3), (2, 3, 4)))
    with pytest.raises(LayoutInconsistent):
        default_layout(f)
    with pytest.raises(LayoutInconsistent):
        check_layout(f, CombLayout((1, 2, 3, 4), ("above", "above"), (1, 1)))


def test_nested_clause_must_be_shallower():
    f = Formula3SAT(6, ((1, 5, 6), (2, 3, 4)))
    good = default_layout(f)
    assert good.depths == (2, 1)
    with pytest.raises(LayoutInconsistent):
        check_layout(f, CombLayout(good.order, good.sides, (1, 1)))


def test_empty_formula_has_no_crossings():
    inst = build_instance(Formula3SAT(2, ()), CombLayout((1, 2), (), ()))
    assert inst.X == 0 and inst.K == 0 and is_plane(inst.graph, inst.drawing)


def test_single_clause_counts():
    inst = build_instance(SIMPLE, default_layout(SIMPLE))
    rep = structural_audit(inst)
    assert (inst.X, inst.K) == (26, 13)
    assert rep.crossings == 26
    kinds = {}
    for gr in inst.gadgets:
        kinds[gr.kind] = kinds.get(gr.kind, 0) + 1
        assert (len(gr.vertices), len(gr.edges), len(gr.mobile)) == COUNTS[gr.kind]
    assert kinds == {"block": 3, "2-switch": 5, "3-switch": 2}


def test_pressure_and_clause_audits():
    f = Formula3SAT(3, ((1, -2, 3), (-1, 2, -3)))
    inst = build_instance(f, default_layout(f, ("above", "below")))
    assert pressure_audit(inst) > 0
    table = clause_audit(inst)
    for patterns in table.values():
        assert len(patterns) == 8
        for pattern, choices in patterns.items():
            assert bool(choices) == (pattern != (1, 1, 1))


def test_models_untangle_with_exactly_k_moves():
    f = Formula3SAT(4, ((1, -2, 3), (-1, 2, 4)))
    inst = build_instance(f, default_layout(f, ("above", "below")))
    for vals in product((False, True), repeat=4):
        a = {i + 1: v for i, v in enumerate(vals)}
        if f.satisfied_by(a):
            d = untangle_with_assignment(inst, a)
            assert is_plane(inst.graph, d)
            assert sum(1 for v in d if d[v] != inst.drawing[v]) == inst.K
        else:
            with pytest.raises(Unsatisfied):
                untangle_with_assignment(inst, a)


def test_partial_assignment_rejected():
    inst = build_instance(SIMPLE, default_layout(SIMPLE))
    with pytest.raises(Unsatisfied):
        untangle_with_assignment(inst, {1: True})


def test_audit_detects_a_tampered_drawing():
    inst = build_instance(SIMPLE, default_layout(SIMPLE))
    v = min(inst.mobile)
    bad = dict(inst.drawing)
    bad[v] = Point(Rat(10**6), Rat(10**6))
    tampered = dataclasses.replace(inst, drawing=bad)
    assert len(crossing_pairs(inst.graph, bad)) != inst.X
    with pytest.raises(AuditFailure):
        structural_audit(tampered)


def test_audit_detects_wrong_accounting():
    inst = build_instance(SIMPLE, default_layout(SIMPLE))
    with pytest.raises(AuditFailure):
        structural_audit(dataclasses.replace(inst, K=inst.K + 1))
