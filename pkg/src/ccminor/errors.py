"""Exception types shared across the package."""


class GraphError(ValueError):
    """An input graph or argument violates an operation's precondition."""


class CapExceeded(GraphError):
    """A desk-scale size cap was exceeded."""


class TraceError(GraphError):
    """A contraction trace does not replay against its source graph."""


class TheoremViolation(RuntimeError):
    """A constructive proof step failed.

    The step is guaranteed by a theorem, so this always indicates a bug in the
    implementation. ``state`` carries whatever the failing step was looking at.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = dict(state or {})
