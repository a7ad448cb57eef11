"""End-to-end untangling: fix a guaranteed number of vertices, move the rest.

``untangle`` runs distinctify, triangulate, path selection, monotone fixing,
chord lowering, apex placement, region filling and the inverse shear, then
drops the edges added by the triangulation.  Disconnected inputs are first
joined by bridge edges, which are dropped the same way.  Every stage's postcondition is
checked exactly; the lower bound on the number of fixed vertices is enforced
as a runtime assertion.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .bounds import SqrtBound, guarantee_value, outerplanar_bound, general_bound_ceil
from .errors import (
    DuplicatePoints,
    GuaranteeViolated,
    LayoutInconsistent,
    MissingPosition,
    NotOuterplanar,
)
from .geom import Drawing, Point, bit_length, is_plane
from .graph import PlanarGraph, connect_components, is_outerplanar, planar_embed, triangulate, triangulate_outerplanar_fan
from .lowering import distinctify, lower_chords, monotone_fix
from .paths import PathDecomposition, choose_strategy, decompose, diameter_path, fan_path
from .starfill import apex_sees_path, decompose_regions, place_apex, untangle_assemble

__all__ = ["FixReport", "untangle", "untangle_outerplanar", "guarantee_value"]

REPORT_KEYS = (
    "n", "m", "strategy", "l", "i_size", "fixed_count", "moved_count",
    "guarantee_num", "guarantee_den_sq", "max_coord_bits", "runtime_ms",
)


@dataclass
class FixReport:
    """Summary of one untangling run.

    ``guarantee`` is a square root; its square is
    ``guarantee_num / guarantee_den_sq``.
    """

    n: int
    m: int
    strategy: str
    l: int
    i_size: int
    fixed: frozenset[int]
    guarantee: SqrtBound
    max_coord_bits: int = 0
    runtime_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def fixed_count(self) -> int:
        return len(self.fixed)

    @property
    def moved_count(self) -> int:
        return self.n - len(self.fixed)

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "m": self.m,
            "strategy": self.strategy,
            "l": self.l,
            "i_size": self.i_size,
            "fixed_count": self.fixed_count,
            "moved_count": self.moved_count,
            "guarantee_num": self.guarantee.num,
            "guarantee_den_sq": self.guarantee.den,
            "max_coord_bits": self.max_coord_bits,
            "runtime_ms": round(self.runtime_ms, 3),
        }

    def to_text(self) -> str:
        return "".join(f"{k} {v}\n" for k, v in self.as_dict().items())


def parse_report(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            key, _, value = line.partition(" ")
            out[key] = value.strip()
    return out


def _coord_bits(d: Mapping[int, Point]) -> int:
    return max((max(bit_length(p.x), bit_length(p.y)) for p in d.values()), default=0)


def _check_input(g: PlanarGraph, d0: Mapping[int, Point]) -> None:
    missing = [v for v in range(g.n) if v not in d0]
    if missing:
        raise MissingPosition(f"no position for vertices {missing[:10]}")
    pts = [d0[v] for v in range(g.n)]
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("two vertices share a position")


def _identity(g: PlanarGraph, d0: Mapping[int, Point], t0: float) -> tuple[Drawing, FixReport]:
    d = {v: d0[v] for v in range(g.n)}
    rep = FixReport(g.n, g.m, "identity", 0, 0, frozenset(range(g.n)),
                    SqrtBound(Fraction(g.n * g.n), "identity"), _coord_bits(d))
    rep.runtime_ms = (time.perf_counter() - t0) * 1000
    return d, rep


def _run(g: PlanarGraph, d0: Mapping[int, Point], tri: PlanarGraph, pd: PathDecomposition,
         t0: float, general_check: bool) -> tuple[Drawing, FixReport]:
    shear, dsh = distinctify({v: d0[v] for v in range(g.n)})
    fixed, d1, pd1 = monotone_fix(dsh, pd)
    d2, state = lower_chords(d1, pd1)
    d3 = place_apex(d2, pd1)
    if not apex_sees_path(d3, pd1):
        raise LayoutInconsistent("apex does not see the whole path")
    tasks = decompose_regions(pd1.graph, pd1, state)
    _check_partition(tri, pd1, tasks)
    final = untangle_assemble(pd1.graph, tasks, d3)
    for v in fixed:
        if final[v] != dsh[v]:
            raise LayoutInconsistent(f"fixed vertex {v} moved")
    if not is_plane(tri, final):
        raise LayoutInconsistent("triangulated drawing is not plane")
    out = shear.invert_all(final)
    for v in fixed:
        if out[v] != d0[v]:
            raise LayoutInconsistent(f"fixed vertex {v} not restored by the inverse shear")
    # the inverse shear is linear and g is a subgraph of tri, so the
    # plane check on the triangulated drawing already covers the output
    k = len(fixed)
    if k < pd.guarantee.ceil():
        raise GuaranteeViolated(f"{k} fixed < ceil({pd.guarantee})")
    if general_check and g.n >= 4 and k < general_bound_ceil(g.n):
        raise GuaranteeViolated(f"{k} fixed below the general bound for n={g.n}")
    rep = FixReport(g.n, g.m, pd.strategy, pd.l, len(pd.independent_set), frozenset(fixed),
                    pd.guarantee, _coord_bits(out))
    rep.extra = {"added_edges": tri.m - g.m, "regions": len(tasks),
                 "extra_doublings": state.extra_doublings, "moves": len(state.moves)}
    rep.runtime_ms = (time.perf_counter() - t0) * 1000
    return out, rep


def _check_partition(tri: PlanarGraph, pd: PathDecomposition, tasks) -> None:
    seen: set[int] = set()
    for task in tasks:
        inner = task.interior_vertices
        if seen & inner:
            raise LayoutInconsistent("regions share interior vertices")
        seen |= inner
    expected = set(range(tri.n)) - set(pd.path) - {pd.apex}
    if seen != expected:
        raise LayoutInconsistent("region interiors do not partition the remaining vertices")


def untangle(g: PlanarGraph, d0: Mapping[int, Point], strategy: str = "auto") -> tuple[Drawing, FixReport]:
    """Plane drawing of ``g`` keeping a certified set of vertices fixed."""
    t0 = time.perf_counter()
    _check_input(g, d0)
    joined, _ = connect_components(g)
    emb = planar_embed(joined)
    if g.n <= 3 or is_plane(g, d0):
        return _identity(g, d0, t0)
    tri, _ = triangulate(emb)
    if strategy == "auto":
        pd = choose_strategy(tri)
    elif strategy == "fan":
        pd = fan_path(tri)
    elif strategy == "diameter":
        pd = diameter_path(tri)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return _run(g, d0, tri, pd, t0, general_check=strategy == "auto")


def untangle_outerplanar(h: PlanarGraph, d0: Mapping[int, Point], u: int | None = None) -> tuple[Drawing, FixReport]:
    """Outerplanar variant: join one vertex to all others, triangulate, and
    untangle along the rim of that vertex; at least ``sqrt(n/2)`` stay."""
    t0 = time.perf_counter()
    _check_input(h, d0)
    if not is_outerplanar(h):
        raise NotOuterplanar("graph is not outerplanar")
    if h.n <= 3 or is_plane(h, d0):
        return _identity(h, d0, t0)
    u = 0 if u is None else u
    tri, _ = triangulate_outerplanar_fan(h, u)
    rim = list(tri.rotation[u])
    tri = tri.with_outer(u, rim[-1])
    pd = decompose(tri, rim, u, "outerplanar", outerplanar_bound(h.n))
    return _run(h, d0, tri, pd, t0, general_check=False)
