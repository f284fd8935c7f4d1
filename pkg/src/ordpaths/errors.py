"""Exception types shared across the package."""


class OrdPathsError(Exception):
    """Base class for all package-specific errors."""


class CycleError(OrdPathsError):
    """The graph contains a directed cycle."""


class NoPathError(OrdPathsError):
    """No source-to-sink path exists.

    ``dag`` optionally carries the offending graph, so callers that only
    need structural statistics (e.g. arc counts of a random sample) can
    still inspect it.
    """

    def __init__(self, message, dag=None):
        super().__init__(message)
        self.dag = dag


class InvalidGraphError(OrdPathsError):
    """The graph violates a structural invariant required by a solver."""


class ParseError(OrdPathsError):
    """An instance file could not be parsed; ``line_no`` is 1-based."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class BadShapeError(OrdPathsError):
    """A generator parameter does not fit the required construction."""


class CapExceededError(OrdPathsError):
    """Path enumeration hit its cap; ``count`` is the partial count."""

    def __init__(self, message, count=0):
        super().__init__(message)
        self.count = count


class TimeoutExceededError(OrdPathsError):
    """A solver run exceeded its deadline."""


class DetachedError(OrdPathsError):
    """A label extension was attempted along an arc not leaving its head node."""
