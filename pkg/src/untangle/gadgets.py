"""Hardness gadgets: a drawing built from a laid-out 3-SAT formula in which
exactly ``K = 13C`` vertices must move when the formula is satisfiable.

Geometry in brief.  Variables sit on the x-axis, one *block* per literal
occurrence, 30 units apart.  A block has four mobile vertices ``a`` (left),
``d`` (top), ``b`` (right), ``c`` (bottom); the edges of ``a`` and ``b``
cross those of ``c`` and ``d``.  Moving ``c, d`` to the centre encodes
*true*, moving ``a, b`` encodes *false*.  The vertex left in place keeps its
long edges, and those block the near position of the literal's 2-switch when
the literal is false: a positive literal's switch stands over ``d`` (or
under ``c``), a negated one beside ``b``.

Each 2-switch is a vertical column with mobile ``q``: its *near* position
sits by the block, its *far* position at the clause.  A clause joins three
columns with two 3-switches ``L`` and ``R``.  Their mobile vertices ``p``
have three positions each: over a column (blocked when that column's ``q``
is far) or the crossover slot ``p3``; the two crossover slots exclude each
other.  So the clause resolves unless all three literals are false.

Every gadget is padded with immobile rails, ladders or roofs to the exact
vertex and edge counts.  Coordinates are small rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .errors import AuditFailure, LayoutInconsistent, ParseError, PlacementBlocked, Unsatisfied
from .geom import Drawing, Point, Rat, crossing_pairs, is_plane
from .graph import PlanarGraph, norm

SPACING = 30
LEVEL = 30
COUNTS = {"block": (28, 28, 4), "2-switch": (15, 14, 1), "3-switch": (23, 18, 1)}


# ---------------------------------------------------------------------------
# formulas and layouts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Formula3SAT:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for i, c in enumerate(self.clauses):
            if len(c) != 3:
                raise ValueError(f"clause {i + 1} has {len(c)} literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range in clause {i + 1}")
            if len({abs(x) for x in c}) != 3:
                raise ValueError(f"clause {i + 1} repeats a variable")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(literal_value(lit, assignment) for lit in c) for c in self.clauses)

    def to_text(self) -> str:
        lines = [f"p cnf3 {self.num_vars} {self.num_clauses}"]
        lines += [" ".join(str(x) for x in c) for c in self.clauses]
        return "\n".join(lines) + "\n"


def literal_value(lit: int, assignment: Mapping[int, bool]) -> bool:
    v = bool(assignment[abs(lit)])
    return v if lit > 0 else not v


def parse_formula(text: str) -> Formula3SAT:
    """``c`` comment lines, a ``p cnf3 V C`` header, then ``C`` clause lines
    of three signed integers (an optional trailing ``0`` is accepted)."""
    header = None
    clauses = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "cnf3":
                raise ParseError("expected 'p cnf3 V C'", no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("bad header counts", no) from None
            continue
        if header is None:
            raise ParseError("clause before header", no)
        try:
            lits = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"bad literal in {line!r}", no) from None
        if len(lits) == 4 and lits[-1] == 0:
            lits.pop()
        if len(lits) != 3:
            raise ParseError("a clause needs exactly 3 literals", no)
        clauses.append(tuple(lits))
    if header is None:
        raise ParseError("missing 'p cnf3' header")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return Formula3SAT(header[0], tuple(clauses))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class CombLayout:
    """Variable order along the x-axis and, per clause, its side and
    nesting depth (1 for innermost).  Clause indices are 1-based."""

    order: tuple[int, ...]
    sides: tuple[str, ...]
    depths: tuple[int, ...]

    def to_text(self) -> str:
        lines = ["o " + " ".join(str(v) for v in self.order)]
        lines += [f"l {i + 1} {s} {d}" for i, (s, d) in enumerate(zip(self.sides, self.depths))]
        return "\n".join(lines) + "\n"


def parse_layout(text: str, f: Formula3SAT) -> CombLayout:
    """Lines ``l <clause> <above|below> <depth>``; an optional line
    ``o v1 v2 ...`` gives the variable order (default ``1..V``)."""
    order = None
    entries: dict[int, tuple[str, int]] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("c", "#")):
            continue
        parts = line.split()
        try:
            if parts[0] == "o":
                order = tuple(int(x) for x in parts[1:])
            elif parts[0] == "l" and len(parts) == 4:
                idx, side, depth = int(parts[1]), parts[2], int(parts[3])
                if side not in ("above", "below") or depth < 1:
                    raise ParseError(f"bad layout line {line!r}", no)
                if idx in entries:
                    raise ParseError(f"clause {idx} laid out twice", no)
                entries[idx] = (side, depth)
            else:
                raise ParseError(f"bad layout line {line!r}", no)
        except ValueError:
            raise ParseError(f"bad number in {line!r}", no) from None
    if set(entries) != set(range(1, f.num_clauses + 1)):
        raise ParseError("layout must name every clause exactly once")
    order = order or tuple(range(1, f.num_vars + 1))
    return CombLayout(order, tuple(entries[i][0] for i in range(1, f.num_clauses + 1)),
                      tuple(entries[i][1] for i in range(1, f.num_clauses + 1)))


def _check_order(f: Formula3SAT, layout: CombLayout) -> dict[int, int]:
    if sorted(layout.order) != list(range(1, f.num_vars + 1)):
        raise LayoutInconsistent("variable order must list every variable once")
    if len(layout.sides) != f.num_clauses or len(layout.depths) != f.num_clauses:
        raise LayoutInconsistent("layout and formula disagree on the number of clauses")
    return {v: i for i, v in enumerate(layout.order)}


def _slots(f: Formula3SAT, layout: CombLayout) -> dict[tuple[int, int], int]:
    """Block slot (global x index) of every literal occurrence ``(clause,
    position)``.  Per variable, occurrences are ordered so that clauses
    using the variable as their right leg come first (innermost first),
    then middle legs, then left legs (outermost first)."""
    rank = _check_order(f, layout)
    per_var: dict[int, list] = {v: [] for v in layout.order}
    for ci, c in enumerate(f.clauses):
        legs = sorted(c, key=lambda lit: rank[abs(lit)])
        for k, lit in enumerate(legs):
            depth = layout.depths[ci]
            side = 0 if layout.sides[ci] == "above" else 1
            key = (side, 2 - k, depth if k == 2 else -depth, ci)
            per_var[abs(lit)].append((key, ci, c.index(lit)))
    out = {}
    slot = 0
    for v in layout.order:
        for _, ci, pos in sorted(per_var[v]):
            out[(ci, pos)] = slot
            slot += 1
    return out


def _legs(f: Formula3SAT, slots: Mapping[tuple[int, int], int], ci: int) -> list[int]:
    return sorted(slots[(ci, k)] for k in range(3))


def check_layout(f: Formula3SAT, layout: CombLayout) -> dict[tuple[int, int], int]:
    """Slots of all literal occurrences; raises :class:`LayoutInconsistent`
    unless same-side clause intervals are disjoint or nested strictly
    between two consecutive legs with a smaller depth."""
    slots = _slots(f, layout)
    for i in range(f.num_clauses):
        for j in range(f.num_clauses):
            if i == j or layout.sides[i] != layout.sides[j]:
                continue
            li, lj = _legs(f, slots, i), _legs(f, slots, j)
            if li[2] < lj[0] or lj[2] < li[0]:
                continue
            inside = any(lj[k] < li[0] and li[2] < lj[k + 1] for k in range(2))
            if inside:
                if layout.depths[i] >= layout.depths[j]:
                    raise LayoutInconsistent(f"clause {i + 1} is nested in clause {j + 1} but not shallower")
            elif not any(li[k] < lj[0] and lj[2] < li[k + 1] for k in range(2)):
                raise LayoutInconsistent(f"clauses {i + 1} and {j + 1} interleave")
    return slots


def default_layout(f: Formula3SAT, sides: Sequence[str] | None = None) -> CombLayout:
    """Natural variable order, the given sides (all ``above`` by default)
    and depths from interval containment.  Raises
    :class:`LayoutInconsistent` when the intervals are not laminar."""
    sides = tuple(sides) if sides is not None else ("above",) * f.num_clauses
    order = tuple(range(1, f.num_vars + 1))
    depths = [1] * f.num_clauses
    # depths only depend on containment, which the slot order fixes once
    # depths are consistent; iterate to a fixed point
    for _ in range(f.num_clauses + 1):
        slots = _slots(f, CombLayout(order, sides, tuple(depths)))
        new = []
        for i in range(f.num_clauses):
            li = _legs(f, slots, i)
            inner = [depths[j] for j in range(f.num_clauses)
                     if j != i and sides[j] == sides[i] and li[0] < min(_legs(f, slots, j)) and max(_legs(f, slots, j)) < li[2]]
            new.append(1 + max(inner, default=0))
        if new == depths:
            break
        depths = new
    layout = CombLayout(order, sides, tuple(depths))
    check_layout(f, layout)
    return layout


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


@dataclass
class GadgetRecord:
    kind: str
    role: str
    vertices: list[int] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    mobile: list[int] = field(default_factory=list)


@dataclass
class GadgetInstance:
    """``predestined[v]`` maps a position label to a target point;
    ``K = X/2`` mobile vertices must move."""

    graph: PlanarGraph
    drawing: Drawing
    mobile: frozenset[int]
    predestined: dict[int, dict[str, Point]]
    K: int
    X: int
    num_clauses: int
    formula: Formula3SAT
    layout: CombLayout
    gadgets: list[GadgetRecord]
    blocks: dict[tuple[int, int], int]
    columns: dict[tuple[int, int], int]
    clauses: list[dict]
    gap: Rat

    def header(self) -> str:
        return f"family hardness clauses {self.num_clauses} K {self.K} X {self.X}"


class _Builder:
    def __init__(self) -> None:
        self.pos: list[Point] = []
        self.edges: list[tuple[int, int]] = []
        self.gadgets: list[GadgetRecord] = []
        self.predestined: dict[int, dict[str, Point]] = {}

    def gadget(self, kind: str, role: str) -> int:
        self.gadgets.append(GadgetRecord(kind, role))
        return len(self.gadgets) - 1

    def vertex(self, g: int, p: Point, targets: dict[str, Point] | None = None) -> int:
        v = len(self.pos)
        self.pos.append(p)
        self.gadgets[g].vertices.append(v)
        if targets is not None:
            self.gadgets[g].mobile.append(v)
            self.predestined[v] = targets
        return v

    def edge(self, g: int, u: int, v: int) -> None:
        self.edges.append(norm(u, v))
        self.gadgets[g].edges.append(norm(u, v))

    def path(self, g: int, vs: Sequence[int]) -> None:
        for u, v in zip(vs, vs[1:]):
            self.edge(g, u, v)


def _R(x) -> Rat:
    return x if isinstance(x, type(Rat(0))) else Rat(x)


def _block(B: _Builder, xb: Rat) -> int:
    """Four mobile vertices around a centre; 28 vertices, 28 edges."""
    g = B.gadget("block", "variable")

    def P(x, y) -> Point:
        return Point(xb + _R(x), _R(y))

    fifth = Rat(1, 5)
    half = Rat(1, 2)
    spec = {
        "a": ((-4, 0), (-half, 0), [(-1, 1), (-1, -1)]),
        "b": ((4, 0), (half, 0), [(1, 1), (1, -1)]),
        "c": ((0, -4), (0, -half), [(-2, -fifth), (2, -fifth)]),
        "d": ((0, 4), (0, half), [(-2, fifth), (2, fifth)]),
    }
    for name, (start, target, anchors) in spec.items():
        m = B.vertex(g, P(*start), {"centre": P(*target)})
        for a in anchors:
            B.edge(g, m, B.vertex(g, P(*a)))
    for x0 in (-7, 6):
        left = [B.vertex(g, P(x0, y)) for y in (-3, -1, 1, 3)]
        right = [B.vertex(g, P(x0 + 1, y)) for y in (-3, -1, 1, 3)]
        B.path(g, left)
        B.path(g, right)
        for u, v in zip(left, right):
            B.edge(g, u, v)
    return g


def _two_switch(B: _Builder, role: str, xc: Rat, y1: Rat, top: Rat, sx: Rat, sy: int) -> int:
    """Vertical 2-switch: mobile ``q`` starts between ``u1`` and ``u2``,
    crossing two short bars; it resolves to ``near`` (height ``y1``) or
    ``far`` (height ``top``).  15 vertices, 14 edges."""
    g = B.gadget("2-switch", role)

    def P(x, y) -> Point:
        return Point(xc + x, sy * y)

    m = (y1 + top) / 2
    h = (top - y1) / 2
    s = min(h / 4, Rat(1, 2))
    q = B.vertex(g, P(0, m), {"near": P(0, y1), "far": P(0, top)})
    us = []
    for sgn in (-1, 1):
        u = B.vertex(g, P(sgn * sx, m))
        lo = B.vertex(g, P(sgn * sx / 2, m - s))
        hi = B.vertex(g, P(sgn * sx / 2, m + s))
        B.edge(g, q, u)
        B.edge(g, lo, hi)
        B.edge(g, u, hi)
        rail = [B.vertex(g, P(sgn * 2 * sx, y)) for y in (m - h / 2, m, m + h / 4, m + h / 2)]
        B.path(g, rail)
        B.edge(g, u, rail[2])
        us.append(u)
    return g


def _three_switch(B: _Builder, xm: Rat, top: Rat, targets: dict[str, Point], sy: int) -> int:
    """Horizontal 3-switch: mobile ``p`` hangs above ``w1, w2`` crossing two
    bars and resolves to one of three targets below.  23 vertices, 18
    edges."""
    g = B.gadget("3-switch", "clause")
    ht = top + 8

    def P(x, y) -> Point:
        return Point(xm + x, sy * y)

    p = B.vertex(g, P(0, ht + 1), targets)
    for sgn in (-1, 1):
        w = B.vertex(g, P(sgn, ht))
        B.edge(g, p, w)
        a = B.vertex(g, P(sgn * Rat(3, 4), ht + Rat(1, 2)))
        b = B.vertex(g, P(sgn * Rat(1, 4), ht + Rat(1, 2)))
        B.edge(g, a, b)
    for dy in (3, 4):
        B.path(g, [B.vertex(g, P(-7 + 2 * i, ht + dy)) for i in range(8)])
    return g


def build_instance(f: Formula3SAT, layout: CombLayout) -> GadgetInstance:
    slots = check_layout(f, layout)
    C = f.num_clauses
    gap = Rat(1, 8 * max(C, 1))
    B = _Builder()
    blocks: dict[tuple[int, int], int] = {}
    columns: dict[tuple[int, int], int] = {}
    for occ, slot in sorted(slots.items(), key=lambda kv: kv[1]):
        blocks[occ] = _block(B, Rat(SPACING * slot))
    clauses = []
    for ci, c in enumerate(f.clauses):
        sy = 1 if layout.sides[ci] == "above" else -1
        top = Rat(10 + LEVEL * layout.depths[ci])
        occs = sorted(((ci, k) for k in range(3)), key=lambda o: slots[o])
        xs, eps, hs = [], [], []
        for occ in occs:
            lit = c[occ[1]]
            x = Rat(SPACING * slots[occ]) + (0 if lit > 0 else Rat(7, 2))
            y1 = Rat(3) if lit > 0 else Rat(1, 10)
            columns[occ] = _two_switch(B, "column", x, y1, top, Rat(1), sy)
            h = (top - y1) / 2
            xs.append(x)
            hs.append(h)
            eps.append(min(h / 4, Rat(2)))
        x1, x2, x3 = xs

        def P(x, y) -> Point:
            return Point(x, sy * y)

        off = gap * eps[1] / hs[1]
        left = {"p1": P(x1, top - eps[0]), "p2": P(x2 - off, top - eps[1]), "p3": P(x2 + 3, top + 1)}
        right = {"p1": P(x3, top - eps[2]), "p2": P(x2 + off, top - eps[1]), "p3": P(x2 - 3, top + 1)}
        xl, xr = (x1 + x2) / 2, (x2 + x3) / 2
        gl = _three_switch(B, xl, top, left, sy)
        il = _two_switch(B, "inner", xl, top + 2, top + 6, Rat(1, 4), sy)
        gr = _three_switch(B, xr, top, right, sy)
        ir = _two_switch(B, "inner", xr, top + 2, top + 6, Rat(1, 4), sy)
        clauses.append({"columns": occs, "L": gl, "R": gr, "inner": (il, ir)})
    n = len(B.pos)
    graph = PlanarGraph.from_edges(n, B.edges)
    drawing = {v: p for v, p in enumerate(B.pos)}
    X = 26 * C
    return GadgetInstance(graph, drawing, frozenset(B.predestined), B.predestined, X // 2, X, C,
                          f, layout, B.gadgets, blocks, columns, clauses, gap)


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


@dataclass
class AuditReport:
    X: int
    K: int
    crossings: int
    counts: dict[str, int]
    pressure_checked: int = 0
    clause_patterns: dict[int, dict[tuple[int, int, int], list[tuple[str, str]]]] = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"X {self.X}", f"K {self.K}", f"crossings {self.crossings}"]
        out += [f"{k} {v}" for k, v in sorted(self.counts.items())]
        out.append(f"pressure_checked {self.pressure_checked}")
        return out


def structural_audit(inst: GadgetInstance, geometric: bool = True) -> AuditReport:
    """Exact crossing count, per-gadget sizes and the mobile-incidence
    pattern; with ``geometric`` also the pressure and clause semantics.
    Raises :class:`AuditFailure` at the first violation."""
    if inst.X != 26 * inst.num_clauses or 2 * inst.K != inst.X:
        raise AuditFailure(f"X={inst.X}, K={inst.K} for {inst.num_clauses} clauses")
    counts: dict[str, int] = {}
    for i, gr in enumerate(inst.gadgets):
        nv, ne, nm = COUNTS[gr.kind]
        if (len(gr.vertices), len(gr.edges), len(gr.mobile)) != (nv, ne, nm):
            raise AuditFailure(f"gadget {i} ({gr.kind}) has {len(gr.vertices)} vertices, "
                               f"{len(gr.edges)} edges, {len(gr.mobile)} mobile; expected {nv}/{ne}/{nm}")
        counts[gr.kind] = counts.get(gr.kind, 0) + 1
    C = inst.num_clauses
    expected = {"block": 3 * C, "2-switch": 5 * C, "3-switch": 2 * C} if C else {}
    if counts != expected:
        raise AuditFailure(f"gadget counts {counts}, expected {expected}")
    pairs = crossing_pairs(inst.graph, inst.drawing)
    if len(pairs) != inst.X:
        raise AuditFailure(f"{len(pairs)} crossings, expected X={inst.X}")
    mobile_edge = {e for e in inst.graph.edges if e[0] in inst.mobile or e[1] in inst.mobile}
    crossed: dict[tuple[int, int], int] = {}
    for e, f in pairs:
        if e not in mobile_edge and f not in mobile_edge:
            raise AuditFailure(f"crossing {e} x {f} involves no mobile edge")
        crossed[e] = crossed.get(e, 0) + 1
        crossed[f] = crossed.get(f, 0) + 1
    per_vertex = [0] * inst.graph.n
    for e, k in crossed.items():
        if k != 1:
            raise AuditFailure(f"edge {e} is crossed {k} times")
        for v in e:
            per_vertex[v] += 1
    for v in range(inst.graph.n):
        if (v in inst.mobile) != (per_vertex[v] == 2):
            raise AuditFailure(f"vertex {v} ({'mobile' if v in inst.mobile else 'immobile'}) "
                               f"has {per_vertex[v]} crossed incident edges")
    rep = AuditReport(inst.X, inst.K, len(pairs), counts)
    if geometric:
        rep.pressure_checked = pressure_audit(inst)
        rep.clause_patterns = clause_audit(inst)
    return rep


def _block_state(inst: GadgetInstance, g: int, value: bool, d: dict[int, Point]) -> None:
    """``value`` true moves ``c, d``; false moves ``a, b``."""
    a, b, c, dd = inst.gadgets[g].mobile
    for v in ((c, dd) if value else (a, b)):
        d[v] = inst.predestined[v]["centre"]


def _edges_of(inst: GadgetInstance, gs) -> list[tuple[int, int]]:
    return [e for g in gs for e in inst.gadgets[g].edges]


def pressure_audit(inst: GadgetInstance) -> int:
    """For every literal occurrence: with the variable set so the literal is
    false, the near position of its 2-switch crosses the block (two witness
    segments); with the literal true it is free.  Returns the number of
    occurrences checked."""
    checked = 0
    for occ, gb in inst.blocks.items():
        gc = inst.columns[occ]
        lit = inst.formula.clauses[occ[0]][occ[1]]
        q = inst.gadgets[gc].mobile[0]
        edges = _edges_of(inst, (gb, gc))
        for lit_true in (False, True):
            d = dict(inst.drawing)
            _block_state(inst, gb, lit_true == (lit > 0), d)
            d[q] = inst.predestined[q]["near"]
            bad = crossing_pairs(edges, d)
            if lit_true and bad:
                raise AuditFailure(f"occurrence {occ}: near position blocked by a true literal")
            if not lit_true:
                witness = {e for pair in bad for e in pair if q in e}
                if len(witness) != 2:
                    raise AuditFailure(f"occurrence {occ}: false literal leaves the near position open")
        checked += 1
    return checked


def _clause_local(inst: GadgetInstance, cl: dict) -> list[tuple[int, int]]:
    gs = [inst.columns[o] for o in cl["columns"]] + [cl["L"], cl["R"], *cl["inner"]]
    return _edges_of(inst, gs)


def _clause_choices(inst: GadgetInstance, cl: dict, pressure: Sequence[bool],
                    base: Mapping[int, Point]) -> list[tuple[str, str]]:
    """Plane combinations of 3-switch positions for the given pressure
    pattern, columns placed accordingly."""
    d = dict(base)
    for occ, pr in zip(cl["columns"], pressure):
        q = inst.gadgets[inst.columns[occ]].mobile[0]
        d[q] = inst.predestined[q]["far" if pr else "near"]
    for g in cl["inner"]:
        r = inst.gadgets[g].mobile[0]
        d[r] = inst.predestined[r]["near"]
    pl, pr_ = inst.gadgets[cl["L"]].mobile[0], inst.gadgets[cl["R"]].mobile[0]
    edges = _clause_local(inst, cl)
    out = []
    for sl, sr in product(("p1", "p2", "p3"), repeat=2):
        d[pl] = inst.predestined[pl][sl]
        d[pr_] = inst.predestined[pr_][sr]
        if is_plane(edges, d):
            out.append((sl, sr))
    return out


def clause_audit(inst: GadgetInstance) -> dict[int, dict[tuple[int, int, int], list[tuple[str, str]]]]:
    """Every clause gadget resolves under each pressure pattern except the
    one where all three literals are false."""
    out = {}
    for ci, cl in enumerate(inst.clauses):
        table = {}
        for pattern in product((0, 1), repeat=3):
            ok = _clause_choices(inst, cl, [bool(x) for x in pattern], inst.drawing)
            if bool(ok) == (pattern == (1, 1, 1)):
                raise AuditFailure(f"clause {ci + 1}: pattern {pattern} gives {ok}")
            table[pattern] = ok
        out[ci] = table
    return out


# ---------------------------------------------------------------------------
# untangling from a model
# ---------------------------------------------------------------------------


def untangle_with_assignment(inst: GadgetInstance, assignment: Mapping[int, bool]) -> Drawing:
    """Move exactly ``K`` mobile vertices to predestined positions chosen by
    a satisfying assignment; the result is checked to be plane."""
    f = inst.formula
    missing = [v for v in range(1, f.num_vars + 1) if v not in assignment]
    if missing:
        raise Unsatisfied(f"no value for variables {missing}")
    if not f.satisfied_by(assignment):
        raise Unsatisfied("assignment falsifies a clause")
    d = dict(inst.drawing)
    for (ci, k), gb in inst.blocks.items():
        _block_state(inst, gb, bool(assignment[abs(f.clauses[ci][k])]), d)
    for ci, cl in enumerate(inst.clauses):
        pressure = [not literal_value(f.clauses[o[0]][o[1]], assignment) for o in cl["columns"]]
        choices = _clause_choices(inst, cl, pressure, d)
        if not choices:
            raise PlacementBlocked(f"clause {ci + 1} cannot be resolved")
        sl, sr = choices[0]
        for occ, pr in zip(cl["columns"], pressure):
            q = inst.gadgets[inst.columns[occ]].mobile[0]
            d[q] = inst.predestined[q]["far" if pr else "near"]
        for g in cl["inner"]:
            r = inst.gadgets[g].mobile[0]
            d[r] = inst.predestined[r]["near"]
        d[inst.gadgets[cl["L"]].mobile[0]] = inst.predestined[inst.gadgets[cl["L"]].mobile[0]][sl]
        d[inst.gadgets[cl["R"]].mobile[0]] = inst.predestined[inst.gadgets[cl["R"]].mobile[0]][sr]
    moved = sum(1 for v in d if d[v] != inst.drawing[v])
    if moved != inst.K:
        raise PlacementBlocked(f"moved {moved} vertices, expected K={inst.K}")
    if not is_plane(inst.graph, d):
        raise PlacementBlocked("assignment drawing is not plane")
    return d
