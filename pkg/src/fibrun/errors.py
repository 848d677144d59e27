"""Exception hierarchy shared by the library and the CLI (which maps them to exit codes)."""


class FibrunError(Exception):
    pass


class InvalidVertexError(FibrunError, ValueError):
    """A string is not a vertex of the requested R_n."""


class LengthMismatchError(InvalidVertexError):
    pass


class NotRunConstrainedError(InvalidVertexError):
    pass


class BudgetExceededError(FibrunError):
    """A configured memory or time budget would be exceeded.

    ``partial`` carries whatever was computed before the budget ran out.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class BarrierOverlapError(FibrunError):
    """Two distance-barriers of opposite orientation share a column (strict mode only)."""

    def __init__(self, message: str, windows=()):
        super().__init__(message)
        self.windows = tuple(windows)


class ConstructionError(FibrunError):
    """A witness construction is infeasible or failed post-validation."""


class DisconnectedGraphError(FibrunError):
    pass
