"""Exception types shared across the package."""


class EdgeBoostError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(EdgeBoostError, ValueError):
    """An argument violates a documented precondition."""


class InvariantViolationError(EdgeBoostError):
    """An internal data-structure invariant would be broken."""


class EmptyScoredSetError(EdgeBoostError):
    """An operation that needs scored candidate edges received none."""


class EdgelessGraphError(EdgeBoostError):
    """Modularity (and friends) are undefined on a graph with no edges."""


class DetectorConfigError(EdgeBoostError):
    """Unknown or misconfigured community detector."""


class GenerationInfeasibleError(EdgeBoostError):
    """Benchmark parameters cannot be realized as a graph."""


class EdgeFileFormatError(EdgeBoostError):
    """A data file could not be parsed; carries the offending line number."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no
