"""Exception types shared across the package.

Validation problems (bad user input, out-of-range parameters) are kept
distinct from numerical failures so the CLI can map them to different
exit codes.
"""


class GravwellError(Exception):
    """Base class for all package errors."""


class ValidationError(GravwellError, ValueError):
    """Invalid configuration or argument value."""


class DomainError(GravwellError, ValueError):
    """Argument outside the mathematical domain of a function."""


class RangeOverflowError(GravwellError, OverflowError):
    """Result not representable in double precision; use a log-space variant."""


class ConvergenceError(GravwellError, RuntimeError):
    """An iterative solver failed to converge or to bracket a root."""
