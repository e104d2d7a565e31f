"""Shared Taylor-series summation for the rule evaluators."""

import math
from typing import Iterable, NamedTuple, Optional, Tuple

from gaussquad.core.config import get_settings
from gaussquad.core.errors import TermLimitExceeded
from gaussquad.core.scalar import Real, ScalarContext


class TermLimits(NamedTuple):
    min_terms: int
    max_terms: int

    @classmethod
    def for_digits(cls, digits: int, min_terms: Optional[int] = None) -> "TermLimits":
        """
        Floor of 20 terms and a cap of 50*E^1.5 terms, E = log2(D) - 3.

        E is taken continuously in D; the cap never drops below twice the floor.
        """
        floor = min_terms if min_terms is not None else get_settings().min_terms
        e = max(math.log2(digits) - 3.0, 0.0)
        return cls(floor, max(2 * floor, math.ceil(50.0 * e ** 1.5)))


def sum_taylor(
    ctx: ScalarContext,
    terms: Iterable[Real],
    h: Real,
    tol: Real,
    limits: TermLimits,
    point: Optional[Real] = None
) -> Tuple[Real, Real, int]:
    """
    Sum y(c+h) = sum u_k and y'(c+h) = sum k u_k / h for scaled terms u_k = y^(k)(c) h^k / k!.

    Summation stops after two consecutive terms whose contribution, relative
    to |y| + |h y'|, is below tol, and never before limits.min_terms.
    """
    value = ctx.zero
    slope = ctx.zero
    quiet = 0
    count = 0
    for k, u in enumerate(terms):
        value += u
        slope += k * u
        count = k + 1
        if abs(u) * (k + 1) <= tol * (abs(value) + abs(slope)):
            quiet += 1
        else:
            quiet = 0
        if count >= limits.min_terms and quiet >= 2:
            return value, slope / h, count
        if count >= limits.max_terms:
            break
    raise TermLimitExceeded(
        f"Taylor series not converged within {limits.max_terms} terms (h = {h})",
        point=point, terms=count,
    )
