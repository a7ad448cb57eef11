"""Line-based exact graph files.

::

    # free comment lines
    n <count>
    v <id> <x> <y>      coordinates as integers or p/q
    e <u> <v>
    a <id> mobile

Serialisation is canonical: comments, ``n``, vertices by id, edges sorted,
annotations sorted.  Parsing a canonical file and writing it back gives the
same bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import DanglingEdge, DuplicateVertex, ParseError
from .geom import Drawing, Point, format_rat, parse_rat
from .graph import PlanarGraph, norm


@dataclass
class GraphFile:
    graph: PlanarGraph
    drawing: Drawing
    mobile: frozenset[int] = frozenset()
    comments: list[str] = field(default_factory=list)

    @property
    def family(self) -> str | None:
        for c in self.comments:
            parts = c.split()
            if len(parts) >= 2 and parts[0] == "family":
                return parts[1]
        return None


def serialize(gf: GraphFile) -> str:
    lines = [f"# {c}" if c else "#" for c in gf.comments]
    lines.append(f"n {gf.graph.n}")
    for v in range(gf.graph.n):
        p = gf.drawing[v]
        lines.append(f"v {v} {format_rat(p.x)} {format_rat(p.y)}")
    lines += [f"e {u} {v}" for u, v in sorted(gf.graph.edges)]
    lines += [f"a {v} mobile" for v in sorted(gf.mobile)]
    return "\n".join(lines) + "\n"


def parse(text: str) -> GraphFile:
    comments: list[str] = []
    n = None
    pos: Drawing = {}
    edges: set[tuple[int, int]] = set()
    mobile: set[int] = set()
    pending: list[tuple[int, int, int]] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "n" and len(parts) == 2:
                if n is not None:
                    raise ParseError("second 'n' line", no)
                n = int(parts[1])
                if n < 0:
                    raise ParseError("negative vertex count", no)
            elif tag == "v" and len(parts) == 4:
                v = int(parts[1])
                if v in pos:
                    raise DuplicateVertex(f"vertex {v} defined twice", no)
                pos[v] = Point(parse_rat(parts[2]), parse_rat(parts[3]))
            elif tag == "e" and len(parts) == 3:
                u, v = int(parts[1]), int(parts[2])
                if u == v:
                    raise ParseError(f"loop at vertex {u}", no)
                if norm(u, v) in edges:
                    raise ParseError(f"edge {u} {v} listed twice", no)
                edges.add(norm(u, v))
                pending.append((u, v, no))
            elif tag == "a" and len(parts) == 3 and parts[2] == "mobile":
                mobile.add(int(parts[1]))
            else:
                raise ParseError(f"unrecognised line {line!r}", no)
        except ValueError as exc:
            raise ParseError(f"bad number in {line!r}: {exc}", no) from None
    if n is None:
        raise ParseError("missing 'n' line")
    if set(pos) != set(range(n)):
        extra = sorted(set(pos) - set(range(n)))
        missing = sorted(set(range(n)) - set(pos))
        raise ParseError(f"vertex ids must be 0..{n - 1}; missing {missing[:5]}, extra {extra[:5]}")
    for u, v, no in pending:
        if u not in pos or v not in pos:
            raise DanglingEdge(f"edge {u} {v} references a missing vertex", no)
    bad = sorted(mobile - set(pos))
    if bad:
        raise ParseError(f"annotation for missing vertex {bad[0]}")
    return GraphFile(PlanarGraph.from_edges(n, edges), pos, frozenset(mobile), comments)


def read(path: str | Path) -> GraphFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def write(path: str | Path, gf: GraphFile) -> None:
    Path(path).write_text(serialize(gf), encoding="utf-8")
