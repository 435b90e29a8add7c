"""Exception hierarchy shared by every module of the package."""


class TightCutError(Exception):
    """Base class for all package errors."""


class GraphDomainError(TightCutError, ValueError):
    """An arc or vertex id is unknown, or an argument is outside its domain."""


class ResourceLimitError(TightCutError, RuntimeError):
    """A bounded search (cycle enumeration, branch and bound) ran over budget."""


class GraphParseError(TightCutError, ValueError):
    """A text graph file is malformed.

    Attributes
    ----------
    line : int
        One-based line number of the offending line.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SolverTimeout(TightCutError, TimeoutError):
    """A solve exceeded its wall-clock deadline."""
