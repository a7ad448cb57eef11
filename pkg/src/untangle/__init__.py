"""Untangling straight-line drawings of planar graphs with many fixed vertices."""

from .geom import Drawing, Point, Rat, crossing_pairs, is_plane, pt
from .graph import PlanarGraph
from .pipeline import FixReport, untangle, untangle_outerplanar

__all__ = [
    "Drawing", "FixReport", "PlanarGraph", "Point", "Rat",
    "crossing_pairs", "is_plane", "pt", "untangle", "untangle_outerplanar",
]
__version__ = "0.1.0"
