"""Exception hierarchy shared by all modules."""


class SingularSpectraError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SingularSpectraError, ValueError):
    """Argument outside the domain of a function."""


class FriedrichsUndefined(DomainError):
    """A quantity involving tan(theta_1) was requested for the Friedrichs realization."""


class PoleAt(SingularSpectraError, ArithmeticError):
    """A logarithmic derivative was evaluated at (or too near) a zero."""


class EigenvalueHit(PoleAt):
    """The spectral parameter coincides with an eigenvalue."""


class BracketFailure(SingularSpectraError, RuntimeError):
    """A root could not be bracketed."""


class SlowConvergence(SingularSpectraError, RuntimeError):
    """A truncated series did not reach the requested tolerance."""


class ContourTooClose(SingularSpectraError, RuntimeError):
    """An integration contour passes too close to a zero of the secular function."""


class NegativeEigenvalueContour(ContourTooClose):
    """The contour anchor cannot be placed to avoid the negative-eigenvalue zeros."""


class StepFailure(SingularSpectraError, RuntimeError):
    """ODE integration in the shooting oracle broke down."""
