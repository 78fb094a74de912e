"""Exception types shared across the package."""


class LadderlineError(Exception):
    """Base class for all package errors."""


class UndefinedNodeError(LadderlineError):
    """A placement map is missing a node it must cover."""


class UnplacedNodeError(LadderlineError):
    """A line position was requested for a node that is not on the line."""


class NodeSetMismatchError(LadderlineError):
    """Two orders that must range over the same nodes do not."""


class TooLargeError(LadderlineError):
    """Input exceeds the exact-search size cap."""


class EmptyGraphError(LadderlineError):
    """The operation needs at least one edge or node."""


class NotATreeError(LadderlineError):
    """A tree was required but the graph has a cycle or is disconnected."""


class NotALineGraphError(LadderlineError):
    """A path-shaped graph was required."""


class EmptyCoreError(LadderlineError):
    """The tree has no trunk core; the caller must use the small-tree paths."""


class EdgeNotInComponentError(LadderlineError):
    """The requested edge does not belong to the component."""


class CycleTooShortError(LadderlineError):
    """Frames are only defined for cycles of length at least six."""


class UncompletedFrameError(LadderlineError):
    """Decomposition requires every frame to be completed first."""


class NoValidOrientationError(LadderlineError):
    """No orientation of an attached path satisfies the seam rule.

    Signals a violated precondition in the caller: the input cannot be laid
    out with the requested extremes.
    """


class InfeasibleConstraintsError(LadderlineError):
    """The requested left/right marks cannot be honoured."""


class EnsureFailedError(LadderlineError):
    """A stated algorithm contract (Ensure clause) does not hold."""


class SelfLoopError(LadderlineError):
    """Requests must join two distinct nodes."""


class NotACycleEdgeError(LadderlineError):
    """The cycle baseline only accepts edges of the ground-truth cycle."""


class InvariantViolationError(LadderlineError):
    """A maintained invariant broke; carries a diagnostic dump."""

    def __init__(self, message: str, dump: object = None):
        super().__init__(message)
        self.dump = dump


class InsufficientDataError(LadderlineError):
    """Scaling analysis needs at least three distinct sizes."""
