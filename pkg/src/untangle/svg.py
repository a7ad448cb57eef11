"""SVG 1.1 rendering of drawings.  Decimals here are for display only."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping
from xml.etree import ElementTree as ET

from .geom import Point, Rat

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class SvgOptions:
    precision: int = 6
    size: int = 600
    margin: Rat = Rat(1, 20)
    radius_frac: Rat = Rat(1, 120)
    title: str = ""


def _fmt(r: Rat, precision: int) -> str:
    s = f"{float(r):.{precision}f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def render_svg(g, d: Mapping[int, Point], fixed=None, options: SvgOptions | None = None) -> str:
    """Edges as lines; vertices in ``fixed`` as filled disks, all others as
    open circles (every vertex is a disk when ``fixed`` is ``None``)."""
    opt = options or SvgOptions()
    pts = [d[v] for v in range(g.n)] if g.n else []
    if pts:
        x0, x1 = min(p.x for p in pts), max(p.x for p in pts)
        y0, y1 = min(p.y for p in pts), max(p.y for p in pts)
    else:
        x0 = y0 = Rat(0)
        x1 = y1 = Rat(1)
    w = max(x1 - x0, y1 - y0, Rat(1))
    pad = w * opt.margin
    vb_x, vb_y = x0 - pad, -(y1 + pad)
    vb_w, vb_h = (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad
    p = opt.precision
    root = ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": str(opt.size), "height": str(opt.size),
        "viewBox": " ".join(_fmt(v, p) for v in (vb_x, vb_y, vb_w, vb_h)),
    })
    if opt.title:
        ET.SubElement(root, "title").text = opt.title
    stroke = _fmt(w / 400, p)
    edges = ET.SubElement(root, "g", {"stroke": "#555", "stroke-width": stroke, "fill": "none"})
    for u, v in sorted(g.edges):
        a, b = d[u], d[v]
        ET.SubElement(edges, "line", {"x1": _fmt(a.x, p), "y1": _fmt(-a.y, p),
                                      "x2": _fmt(b.x, p), "y2": _fmt(-b.y, p)})
    r = _fmt(w * opt.radius_frac, p)
    verts = ET.SubElement(root, "g", {"stroke": "black", "stroke-width": stroke})
    for v in range(g.n):
        q = d[v]
        filled = fixed is None or v in fixed
        ET.SubElement(verts, "circle", {"cx": _fmt(q.x, p), "cy": _fmt(-q.y, p), "r": r,
                                        "fill": "black" if filled else "white",
                                        "class": "fixed" if filled else "moved"})
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
