"""Exception types shared across the package."""


class GrnlarsError(Exception):
    """Base class for every error raised by this package."""


class FormatError(GrnlarsError):
    """An input file could not be parsed or is internally inconsistent."""


class ParameterError(GrnlarsError, ValueError):
    """A parameter or argument lies outside its documented domain."""


class InputError(GrnlarsError, ValueError):
    """Numeric input violates a contract (non-finite, not centered, ...)."""


class EvaluationError(GrnlarsError):
    """A ranked list cannot be scored against the given gold standard."""
