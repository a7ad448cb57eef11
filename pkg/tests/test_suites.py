"""The randomised self-check suites behind ``untangle-cli verify``."""

from __future__ import annotations

import pytest

from untangle.suites import run_suite


@pytest.mark.parametrize("name,cases", [
    ("geom", 100), ("sigma", None), ("chords", 60), ("starfill", 30), ("pipeline", 8), ("hardness", None),
])
def test_suite_passes(name, cases):
    res = run_suite(name, seed=3, cases=cases, qmax=8)
    assert res.cases > 0
    assert res.ok, res.failures[:3]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
