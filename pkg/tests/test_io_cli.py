"""Graph files, SVG and PNG output, and the command-line interface."""

from __future__ import annotations

import random
from pathlib import Path
from xml.etree import ElementTree as ET

import pytest
from hypothesis import given, settings, strategies as st

from untangle import PlanarGraph, pt
from untangle.cli import main
from untangle.errors import DanglingEdge, DuplicateVertex, ParseError
from untangle.geom import Point, Rat
from untangle.io import GraphFile, parse, read, serialize, write
from untangle.pipeline import parse_report
from untangle.plots import fixed_vs_bound
from untangle.randgen import random_drawing, random_triangulation
from untangle.svg import SvgOptions, render_svg

rat = st.fractions(min_value=-10**9, max_value=10**9, max_denominator=10**9)


@st.composite
def graph_files(draw):
    n = draw(st.integers(0, 12))
    pts = draw(st.lists(st.tuples(rat, rat), min_size=n, max_size=n))
    d = {i: Point(Rat(x.numerator, x.denominator), Rat(y.numerator, y.denominator)) for i, (x, y) in enumerate(pts)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=15)) if pairs else []
    mobile = draw(st.frozensets(st.integers(0, n - 1), max_size=n)) if n else frozenset()
    comments = draw(st.lists(st.text(alphabet="abc xyz019", max_size=12).map(str.strip), max_size=3))
    return GraphFile(PlanarGraph.from_edges(n, edges), d, mobile, comments)


@given(graph_files())
@settings(max_examples=150, deadline=None)
def test_serialize_round_trip_is_byte_identical(gf):
    text = serialize(gf)
    back = parse(text)
    assert back.drawing == gf.drawing
    assert back.graph.edges == gf.graph.edges
    assert back.mobile == gf.mobile
    assert serialize(back) == text


def test_exact_rationals_survive():
    num, den = 2**127 - 1, 3**40
    text = f"n 1\nv 0 1/3 -{num}/{den}\n"
    gf = parse(text)
    assert gf.drawing[0] == Point(Rat(1, 3), Rat(-num, den))
    assert serialize(gf) == text


@pytest.mark.parametrize("text,exc", [
    ("n 2\nv 0 0 0\nv 0 1 1\n", DuplicateVertex),
    ("n 2\nv 0 0 0\nv 1 1 1\ne 0 5\n", DanglingEdge),
    ("v 0 0 0\n", ParseError),
    ("n 2\nv 0 0 0\nv 2 1 1\n", ParseError),
    ("n 1\nv 0 x 0\n", ParseError),
    ("n 2\nv 0 0 0\nv 1 1 1\ne 0 0\n", ParseError),
    ("n 2\nv 0 0 0\nv 1 1 1\ne 0 1\ne 1 0\n", ParseError),
    ("n 1\nv 0 0 0\nq\n", ParseError),
])
def test_malformed_files(text, exc):
    with pytest.raises(exc) as info:
        parse(text)
    if exc is not ParseError:
        assert info.value.line is not None


def test_svg_is_well_formed_and_marks_fixed_vertices():
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2)])
    d = {0: pt(0, 0), 1: pt(1, 1), 2: pt(Rat(5, 2), 0)}
    root = ET.fromstring(render_svg(g, d, frozenset({0}), SvgOptions(title="t")))
    ns = {"s": "http://www.w3.org/2000/svg"}
    assert len(root.findall(".//s:line", ns)) == 2
    classes = sorted(c.get("class") for c in root.findall(".//s:circle", ns))
    assert classes == ["fixed", "moved", "moved"]


def test_svg_of_empty_graph():
    root = ET.fromstring(render_svg(PlanarGraph.from_edges(0, []), {}))
    assert root.get("viewBox")


def test_plot_writes_png(tmp_path):
    out = fixed_vs_bound([10, 20, 30], [3, 4, 4], [2, 2, 3], tmp_path / "f.png")
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def _tangled(tmp_path: Path) -> Path:
    rng = random.Random(21)
    g = random_triangulation(25, rng)
    p = tmp_path / "g.txt"
    write(p, GraphFile(g, random_drawing(25, rng)))
    return p


def test_cli_untangle_writes_outputs(tmp_path, capsys):
    src = _tangled(tmp_path)
    out, rep = tmp_path / "o.txt", tmp_path / "r.txt"
    code = main(["untangle", "--input", str(src), "--output", str(out), "--report", str(rep),
                 "--svg-before", str(tmp_path / "a.svg"), "--svg-after", str(tmp_path / "b.svg")])
    assert code == 0
    assert main(["crossings", "--input", str(out)]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1] == "0"
    fields = parse_report(rep.read_text())
    assert int(fields["fixed_count"]) >= 1
    assert (tmp_path / "r.png").exists()
    ET.parse(tmp_path / "b.svg")
    before, after = read(src), read(out)
    kept = sum(1 for v in range(25) if before.drawing[v] == after.drawing[v])
    assert kept == int(fields["fixed_count"])


def test_cli_generate_hardness_has_26_crossings(tmp_path, capsys):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf3 3 1\n1 -2 3\n")
    out = tmp_path / "h.txt"
    assert main(["generate", "--family", "hardness", "--formula", str(f), "--output", str(out)]) == 0
    assert main(["crossings", "--input", str(out)]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1] == "26"
    assert read(out).family == "hardness"


@pytest.mark.parametrize("family", ["sigma", "planar-worstcase", "outerplanar-worstcase", "pathological"])
def test_cli_generate_families(tmp_path, family):
    out = tmp_path / "g.txt"
    assert main(["generate", "--family", family, "--q", "3", "--output", str(out)]) == 0
    assert read(out).family == family


def test_cli_oracles(tmp_path, capsys):
    seq = tmp_path / "s.txt"
    seq.write_text("2 0 3 1\n")
    assert main(["oracle", "--op", "lis", "--input", str(seq)]) == 0
    assert "length 2" in capsys.readouterr().out
    assert main(["oracle", "--op", "separated", "--input", str(seq), "--direction", "dec"]) == 0
    g = tmp_path / "g.txt"
    write(g, GraphFile(PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
                       {0: pt(0, 0), 1: pt(2, 2), 2: pt(2, 0), 3: pt(0, 2)}))
    assert main(["oracle", "--op", "fixsearch", "--input", str(g)]) == 0
    assert "lower_bound 3" in capsys.readouterr().out


def test_cli_render_and_verify(tmp_path):
    src = _tangled(tmp_path)
    assert main(["render", "--input", str(src), "--svg", str(tmp_path / "x.svg")]) == 0
    ET.parse(tmp_path / "x.svg")
    assert main(["verify", "--suite", "geom", "--cases", "20"]) == 0


def test_cli_exit_codes(tmp_path):
    assert main(["untangle", "--input", str(tmp_path / "missing.txt")]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["generate", "--family", "sigma", "--output", str(tmp_path / "x")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\nv 0 0 0\nv 0 1 1\n")
    assert main(["crossings", "--input", str(bad)]) == 2
    k5 = tmp_path / "k5.txt"
    write(k5, GraphFile(PlanarGraph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)]),
                        {i: pt(i, i * i) for i in range(5)}))
    assert main(["untangle", "--input", str(k5)]) == 1
