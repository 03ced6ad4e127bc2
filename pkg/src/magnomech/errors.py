"""Exception types raised across the package."""


class MagnomechError(Exception):
    """Base class for every error this package raises on purpose."""


class ParameterError(MagnomechError, ValueError):
    """A physical parameter or domain object violates its constraints."""


class ConfigError(MagnomechError, ValueError):
    """A config file is malformed, incomplete, or holds unknown keys."""


class ConvergenceError(MagnomechError, RuntimeError):
    """An iterative solve did not reach the requested tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BistabilityError(ConvergenceError):
    """A fixed-point iteration cycles between two residual levels.

    Raised instead of plain :class:`ConvergenceError` when the stall looks
    like a period-two orbit, the signature of a multistable working point.
    """


class StabilityError(MagnomechError, RuntimeError):
    """The drift matrix is not strictly Hurwitz stable."""


class AccuracyError(MagnomechError, RuntimeError):
    """A linear solve produced a residual above the accepted bound."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class PhysicalityError(MagnomechError, RuntimeError):
    """A covariance matrix violates the uncertainty principle."""


class BracketError(MagnomechError, ValueError):
    """A search bracket does not enclose the sought crossing."""
