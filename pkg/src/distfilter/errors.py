"""Exception types shared across the package."""


class DistFilterError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DistFilterError):
    """A text or JSON input could not be parsed."""


class IndexRangeError(DistFilterError):
    """A node or row/column index falls outside 1..n."""


class SelfLoopError(DistFilterError):
    """An edge (i, i) was supplied; the graph model has no self-loops."""


class DisconnectedGraphError(DistFilterError):
    """The operation needs a connected graph (or a reachable target node)."""

    def __init__(self, message: str, unreachable: int | None = None):
        super().__init__(message)
        self.unreachable = unreachable


class NonSquareError(DistFilterError):
    """A square matrix was expected."""


class DimensionMismatchError(DistFilterError):
    """Matrix, vector, or graph sizes do not agree."""


class SingularFactorError(DistFilterError):
    """The factor has no inverse (a zero scale entry)."""


class UnsupportedFactorError(DistFilterError):
    """The operation is not defined for this factor kind."""


class NonLocalFactorError(DistFilterError):
    """A schedule factor has an entry at a non-adjacent node pair."""


class ScheduleGraphMismatchError(DistFilterError):
    """A schedule was built for a different graph than the one supplied."""
