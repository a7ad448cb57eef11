"""Exception hierarchy. Every contract violation raised by the library derives
from :class:`UntangleError`, so callers (and the CLI) can catch one type."""

from __future__ import annotations


class UntangleError(Exception):
    """Base class for all library errors."""


# geometry
class MissingPosition(UntangleError):
    pass


class EmptyKernel(UntangleError):
    pass


class OutOfRange(UntangleError):
    pass


class InvalidPolygon(UntangleError):
    pass


# graphs
class NonPlanar(UntangleError):
    pass


class Disconnected(UntangleError):
    pass


class TooSmall(UntangleError):
    pass


class NotOuterplanar(UntangleError):
    pass


class NotAPath(UntangleError):
    pass


class NotTriangulated(UntangleError):
    pass


# pipeline
class SideConditionViolated(UntangleError):
    pass


class CoverViolation(UntangleError):
    pass


class FillFailure(UntangleError):
    pass


class ChordedBoundary(UntangleError):
    pass


class DuplicatePoints(UntangleError):
    pass


class GuaranteeViolated(UntangleError):
    pass


# hardness gadgets
class LayoutInconsistent(UntangleError):
    pass


class AuditFailure(UntangleError):
    pass


class Unsatisfied(UntangleError):
    pass


class PlacementBlocked(UntangleError):
    pass


# oracles
class VertexMismatch(UntangleError):
    pass


class TooLarge(UntangleError):
    pass


# io
class ParseError(UntangleError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateVertex(ParseError):
    pass


class DanglingEdge(ParseError):
    pass
