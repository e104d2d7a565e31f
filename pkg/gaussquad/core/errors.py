"""Exceptions raised while building quadrature rules."""

from typing import Any, Optional


class QuadratureError(RuntimeError):
    """Base class for every failure inside rule construction."""

    def __init__(self, message: str, point: Optional[Any] = None):
        super().__init__(message)
        self.point = point


class NonPositiveCoefficient(QuadratureError):
    """t_step called where A <= 0; the caller must use the atanh step."""


class DegenerateState(QuadratureError):
    """Both y and y' vanish, so no step direction exists."""


class AtanhDomain(QuadratureError):
    """The atanh argument left (-1, 1); the iterate is outside the basin."""


class MaxIterationsExceeded(QuadratureError):
    def __init__(self, message: str, point: Optional[Any] = None, iterations: int = 0):
        super().__init__(message, point)
        self.iterations = iterations


class BoundViolation(QuadratureError):
    """An iterate left the domain where the evaluator is valid."""


class MonotonicityViolation(QuadratureError):
    """Iterates of one node moved against the sweep direction."""


class TermLimitExceeded(QuadratureError):
    def __init__(self, message: str, point: Optional[Any] = None, terms: int = 0):
        super().__init__(message, point)
        self.terms = terms


class OutsideDisc(QuadratureError):
    """Taylor target outside the disc of convergence around the center."""


class RatioBlowup(QuadratureError):
    """A degree ratio vanished while running the Laguerre recurrence."""


class CFNoConvergence(QuadratureError):
    def __init__(self, message: str, point: Optional[Any] = None, depth: int = 0):
        super().__init__(message, point)
        self.depth = depth


class CountMismatch(QuadratureError):
    """The sweeps produced a number of nodes different from the degree."""


class InconsistentNormalization(QuadratureError):
    """Derivative values from different normalizations were mixed."""


class ZeroDerivative(QuadratureError):
    """A node carries y' = 0, which cannot happen for a simple zero."""


class NoConvergence(QuadratureError):
    """The tridiagonal eigen-iteration did not converge."""
