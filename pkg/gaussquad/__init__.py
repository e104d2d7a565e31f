"""Gauss–Hermite, Gauss–Laguerre and Radau–Laguerre rules by fixed-point iteration."""

from gaussquad.core.scalar import FloatContext, MPMathContext, ScalarContext, get_context
from gaussquad.core.schemas import IterationStats, QuadratureKind, QuadratureRule, RuleFamily
from gaussquad.rules.barycentric import barycentric_weights
from gaussquad.rules.hermite import gauss_hermite
from gaussquad.rules.laguerre import gauss_laguerre, gauss_radau_laguerre, radau_laguerre

__all__ = [
    "FloatContext",
    "MPMathContext",
    "ScalarContext",
    "get_context",
    "IterationStats",
    "QuadratureKind",
    "QuadratureRule",
    "RuleFamily",
    "barycentric_weights",
    "gauss_hermite",
    "gauss_laguerre",
    "gauss_radau_laguerre",
    "radau_laguerre",
]
