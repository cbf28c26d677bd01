"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it.
"""
from __future__ import annotations


class NetKofNError(Exception):
    exit_code = 1

    @property
    def kind(self) -> str:
        return type(self).__name__


class ParseError(NetKofNError, ValueError):
    exit_code = 2


class ValidationError(NetKofNError, ValueError):
    exit_code = 3


class CapacityError(NetKofNError, ValueError):
    exit_code = 4


# graph construction and indexing
class LoopEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class VertexOutOfRange(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class NotConnected(ValidationError):
    pass


class EmptyEdgeSet(ValidationError):
    pass


class AttachVertexMissing(ValidationError):
    pass


class ChordEndpointsAdjacent(ValidationError):
    pass


class ChordEndpointsEqual(ValidationError):
    pass


# subset counting
class SameVertex(ValidationError):
    pass


class AdjacentEndpoints(ValidationError):
    pass


class BadK(ValidationError):
    pass


class TooManyEdges(CapacityError):
    pass


# recurrence
class NegativeCount(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class InconsistentDistribution(NetKofNError):
    """Computed counts disagree with the saturation rule; indicates a bug."""


# failure models
class InvalidParameter(ValidationError):
    pass


class NegativeTime(InvalidParameter):
    pass


class InvalidProbability(InvalidParameter):
    pass
