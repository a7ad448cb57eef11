"""Command-line entry point ``untangle-cli``.

Exit codes: 0 success, 1 contract violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError, UntangleError
from .geom import Point, Rat, crossing_pairs, is_plane
from .graph import PlanarGraph
from .io import GraphFile, read, write

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _svg(path: str, g, d, fixed, precision: int = 6) -> None:
    from .svg import SvgOptions, render_svg

    Path(path).write_text(render_svg(g, d, fixed, SvgOptions(precision=precision)), encoding="utf-8")


def cmd_untangle(args) -> int:
    from .pipeline import untangle

    gf = read(args.input)
    out, rep = untangle(gf.graph, gf.drawing, args.strategy)
    comments = gf.comments + [f"untangled strategy {rep.strategy} fixed {rep.fixed_count}"]
    if args.output:
        write(args.output, GraphFile(gf.graph, out, gf.mobile, comments))
    if args.report:
        Path(args.report).write_text(rep.to_text(), encoding="utf-8")
        from .plots import before_after

        before_after(gf.graph, gf.drawing, out, rep.fixed, Path(args.report).with_suffix(".png"))
    if args.svg_before:
        _svg(args.svg_before, gf.graph, gf.drawing, rep.fixed)
    if args.svg_after:
        _svg(args.svg_after, gf.graph, out, rep.fixed)
    print(rep.to_text(), end="")
    return EXIT_OK


def _generate(args) -> GraphFile:
    fam = args.family
    if fam in ("sigma", "planar-worstcase", "outerplanar-worstcase", "pathological") and args.q is None:
        raise UsageError(f"--q is required for family {fam}")
    if fam == "sigma":
        from .worstcase import sigma

        s = sigma(args.q)
        n = len(s)
        pos = s.position()
        g = PlanarGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        d = {v: Point(Rat(pos[v]), Rat(0)) for v in range(n)}
        return GraphFile(g, d, frozenset(), [f"family sigma q {args.q}",
                                             "sigma " + " ".join(map(str, s.values))])
    if fam in ("planar-worstcase", "outerplanar-worstcase"):
        from .worstcase import outerplanar_worstcase, planar_worstcase

        inst = (planar_worstcase if fam == "planar-worstcase" else outerplanar_worstcase)(args.q)
        notes = [f"family {fam} q {args.q}"] + [f"special {k} {v}" for k, v in sorted(inst.special.items())]
        return GraphFile(inst.graph, inst.drawing, frozenset(), notes)
    if fam == "pathological":
        from .lowering import pathological_instance

        pos, spans, cover = pathological_instance(args.q)
        n = len(pos)
        edges = [(i, i + 1) for i in range(n - 1)] + list(spans)
        return GraphFile(PlanarGraph.from_edges(n, edges), pos, frozenset(cover),
                         [f"family pathological k {args.q}", "mobile marks the cover"])
    if fam == "hardness":
        from .gadgets import build_instance, default_layout, parse_formula, parse_layout

        if not args.formula:
            raise UsageError("--formula is required for family hardness")
        f = parse_formula(Path(args.formula).read_text(encoding="utf-8"))
        layout = (parse_layout(Path(args.layout).read_text(encoding="utf-8"), f)
                  if args.layout else default_layout(f))
        inst = build_instance(f, layout)
        return GraphFile(inst.graph, inst.drawing, inst.mobile, [inst.header()])
    raise UsageError(f"unknown family {fam}")


def cmd_generate(args) -> int:
    gf = _generate(args)
    write(args.output, gf)
    print(f"wrote {args.output}: n {gf.graph.n} m {gf.graph.m}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import run_suite

    res = run_suite(args.suite, seed=args.seed, cases=args.cases, qmax=args.qmax)
    for msg in res.failures[:20]:
        print("  " + msg)
    print(res.summary())
    return EXIT_OK if res.ok else EXIT_VIOLATION


def cmd_crossings(args) -> int:
    gf = read(args.input)
    print(len(crossing_pairs(gf.graph, gf.drawing)))
    return EXIT_OK


def _read_sequence(path: str) -> list[int]:
    vals = []
    for no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0]
        try:
            vals += [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"bad integer in {raw!r}", no) from None
    if len(set(vals)) != len(vals):
        raise ParseError("sequence values must be distinct")
    return vals


def cmd_oracle(args) -> int:
    from .oracles import SubseqQuery, longest_monotone, max_separated_pair, small_fix_search

    direction = "increasing" if args.direction == "inc" else "decreasing"
    if args.op == "lis":
        length, idx = longest_monotone(SubseqQuery(tuple(_read_sequence(args.input)), direction))
        print(f"length {length}")
        print("indices " + " ".join(map(str, idx)))
    elif args.op == "separated":
        print(f"separated {max_separated_pair(_read_sequence(args.input), direction)}")
    else:
        gf = read(args.input)
        res = small_fix_search(gf.graph, gf.drawing)
        print(f"lower_bound {res.lower_bound}")
        print("fixed " + " ".join(map(str, sorted(res.fixed))))
        print(f"heuristic {str(res.heuristic).lower()}")
        print(f"explored {res.explored}")
    return EXIT_OK


def cmd_render(args) -> int:
    gf = read(args.input)
    fixed = None if not gf.mobile else frozenset(range(gf.graph.n)) - gf.mobile
    _svg(args.svg, gf.graph, gf.drawing, fixed, args.precision)
    print(f"wrote {args.svg}; plane {str(is_plane(gf.graph, gf.drawing)).lower()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="untangle-cli", description="Untangle straight-line drawings of planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    u = sub.add_parser("untangle", help="untangle a drawing, keeping many vertices fixed")
    u.add_argument("--input", required=True)
    u.add_argument("--output")
    u.add_argument("--report")
    u.add_argument("--strategy", choices=("auto", "fan", "diameter"), default="auto")
    u.add_argument("--svg-before")
    u.add_argument("--svg-after")
    u.set_defaults(func=cmd_untangle)

    g = sub.add_parser("generate", help="write a generated instance")
    g.add_argument("--family", required=True,
                   choices=("sigma", "planar-worstcase", "outerplanar-worstcase", "pathological", "hardness"))
    g.add_argument("--q", type=int)
    g.add_argument("--formula")
    g.add_argument("--layout")
    g.add_argument("--output", required=True)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="run a randomised self-check suite")
    v.add_argument("--suite", required=True, choices=("geom", "sigma", "chords", "starfill", "pipeline", "hardness"))
    v.add_argument("--qmax", type=int, default=12)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("crossings", help="count crossing edge pairs")
    c.add_argument("--input", required=True)
    c.set_defaults(func=cmd_crossings)

    o = sub.add_parser("oracle", help="run a brute-force oracle")
    o.add_argument("--op", required=True, choices=("lis", "separated", "fixsearch"))
    o.add_argument("--input", required=True)
    o.add_argument("--direction", choices=("inc", "dec"), default="inc")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("render", help="render a drawing as SVG")
    r.add_argument("--input", required=True)
    r.add_argument("--svg", required=True)
    r.add_argument("--precision", type=int, default=6)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UntangleError as exc:
        print(f"contract violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
