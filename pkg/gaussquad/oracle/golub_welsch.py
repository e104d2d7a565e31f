"""
Brute-force reference rules for testing.

Nodes are the eigenvalues of the Jacobi matrix built from the three-term
recurrence and each weight is μ0 times the squared first component of the
matching normalized eigenvector. At binary64 the eigenproblem goes to
scipy; in the mpmath backend an implicit QL iteration carries just the
first eigenvector components.

Only meant for modest n; cost grows quadratically.
"""

from typing import Any, List, NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.linalg import eigh_tridiagonal

from gaussquad.core.errors import NoConvergence
from gaussquad.core.scalar import FloatContext, Real, ScalarContext, get_context
from gaussquad.core.schemas import QuadratureKind, RuleFamily
from gaussquad.utils.logging import get_logger

logger = get_logger(__name__)

QL_SWEEPS = 60


class JacobiMatrix(BaseModel):
    """Symmetric tridiagonal matrix of a recurrence, with the weight's total mass."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    diagonal: Tuple[Any, ...] = Field(description="a_0 .. a_{n-1}")
    off_diagonal: Tuple[Any, ...] = Field(description="b_1 .. b_{n-1}")
    moment: Any = Field(description="μ0, the integral of the weight")
    context: Any = Field(default=None, exclude=True)

    @model_validator(mode="after")
    def _check(self) -> "JacobiMatrix":
        if not self.diagonal:
            raise ValueError("Jacobi matrix needs at least one row")
        if len(self.off_diagonal) != len(self.diagonal) - 1:
            raise ValueError("off-diagonal must be one shorter than the diagonal")
        if any(not b > 0 for b in self.off_diagonal):
            raise ValueError("off-diagonal entries must be positive")
        return self

    @property
    def size(self) -> int:
        return len(self.diagonal)


class LogMoment(NamedTuple):
    """A moment too large for the backend, kept as its natural logarithm."""
    log_value: Real


def _recurrence(kind: QuadratureKind, size: int, ctx: ScalarContext) -> Tuple[List[Real], List[Real]]:
    if kind.family == RuleFamily.HERMITE:
        return [ctx.zero] * size, [ctx.sqrt(ctx.convert(k) / 2) for k in range(1, size)]
    alpha = ctx.convert(kind.alpha)
    diagonal = [2 * k + alpha + 1 for k in range(size)]
    off = [ctx.sqrt(k * (k + alpha)) for k in range(1, size)]
    return diagonal, off


def _moment(kind: QuadratureKind, ctx: ScalarContext, normalized: bool) -> Real:
    if kind.family == RuleFamily.HERMITE:
        return ctx.sqrt(ctx.pi)
    if normalized:
        return ctx.one
    return ctx.exp(ctx.loggamma(ctx.convert(kind.alpha) + 1))


def jacobi_matrix(
    kind: QuadratureKind,
    n: int,
    ctx: Optional[ScalarContext] = None,
    normalized: bool = False
) -> JacobiMatrix:
    """
    Jacobi matrix of the n-point rule of the given kind.

    Hermite: a_k = 0, b_k = √(k/2), μ0 = √π. Laguerre: a_k = 2k+α+1,
    b_k = √(k(k+α)), μ0 = Γ(α+1), or 1 when `normalized`. For Radau–Laguerre
    the matrix has n+1 rows and its last diagonal entry is replaced so that
    0 becomes an eigenvalue.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context()
    radau = kind.family == RuleFamily.RADAU_LAGUERRE
    size = n + 1 if radau else n
    diagonal, off = _recurrence(kind, size, ctx)
    if radau:
        # p_k(0)/p_{k-1}(0) for the monic polynomials
        ratio = -diagonal[0]
        for k in range(1, n):
            ratio = -diagonal[k] - off[k - 1] * off[k - 1] / ratio
        diagonal[n] = -off[n - 1] * off[n - 1] / ratio
    return JacobiMatrix(
        diagonal=tuple(diagonal),
        off_diagonal=tuple(off),
        moment=_moment(kind, ctx, normalized),
        context=ctx,
    )


def implicit_ql(ctx: ScalarContext, diagonal: List[Real], off_diagonal: List[Real]) -> Tuple[List[Real], List[Real]]:
    """
    Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Implicit QL with Wilkinson-type shifts, applying each rotation to the
    first-component vector only.

    Returns:
        (eigenvalues ascending, first components in the same order)
    """
    n = len(diagonal)
    d = list(diagonal)
    e = list(off_diagonal) + [ctx.zero]
    z = [ctx.one] + [ctx.zero] * (n - 1)
    eps = ctx.unit_roundoff
    one = ctx.one

    def copysign(magnitude: Real, sign: Real) -> Real:
        return magnitude if sign >= 0 else -magnitude

    for index in range(n):
        sweeps = 0
        while True:
            m = index
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == index:
                break
            if sweeps == QL_SWEEPS:
                raise NoConvergence(f"QL iteration stalled on eigenvalue {index}", point=d[index])
            sweeps += 1

            g = (d[index + 1] - d[index]) / (2 * e[index])
            r = ctx.sqrt(g * g + one)
            g = d[m] - d[index] + e[index] / (g + copysign(r, g))
            s = one
            c = one
            p = ctx.zero
            for i in range(m - 1, index - 1, -1):
                f = s * e[i]
                b = c * e[i]
                if abs(f) < abs(g):
                    c = g / f
                    r = ctx.sqrt(c * c + one)
                    e[i + 1] = f * r
                    s = one / r
                    c *= s
                else:
                    s = f / g
                    r = ctx.sqrt(s * s + one)
                    e[i + 1] = g * r
                    c = one / r
                    s *= c
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b

                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            d[index] -= p
            e[index] = g
            e[m] = ctx.zero

    order = sorted(range(n), key=lambda i: d[i])
    return [d[i] for i in order], [z[i] for i in order]


def golub_welsch(matrix: JacobiMatrix, ctx: Optional[ScalarContext] = None) -> Tuple[Tuple[Real, ...], Tuple[Real, ...]]:
    """
    Nodes and weights from a Jacobi matrix: weight_i = μ0 v_{0,i}².

    Raises:
        NoConvergence: the QL iteration stalled (degenerate input)
    """
    ctx = ctx or matrix.context or get_context()
    if matrix.size == 1:
        return (matrix.diagonal[0],), (matrix.moment,)
    if isinstance(ctx, FloatContext):
        values, vectors = eigh_tridiagonal(
            np.asarray(matrix.diagonal, dtype=np.float64),
            np.asarray(matrix.off_diagonal, dtype=np.float64),
        )
        first = vectors[0, :]
        mu0 = float(matrix.moment)
        return tuple(float(x) for x in values), tuple(float(mu0 * v * v) for v in first)

    values, first = implicit_ql(ctx, list(matrix.diagonal), list(matrix.off_diagonal))
    logger.debug(f"QL oracle solved a {matrix.size}x{matrix.size} matrix at {ctx.digits} digits")
    return tuple(values), tuple(matrix.moment * v * v for v in first)


def monomial_moment(
    kind: QuadratureKind,
    k: int,
    ctx: Optional[ScalarContext] = None,
    normalized: bool = False
) -> Union[Real, LogMoment]:
    """
    ∫ x^k w(x) dx for the weight of `kind`.

    Hermite: 0 for odd k, Γ((k+1)/2) for even k. Laguerre (and Radau–Laguerre):
    Γ(α+k+1), divided by Γ(α+1) when `normalized`. Values past the backend's
    range come back as LogMoment.
    """
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    ctx = ctx or get_context()
    if kind.family == RuleFamily.HERMITE:
        if k % 2:
            return ctx.zero
        log_value = ctx.loggamma(ctx.convert(k + 1) / 2)
    else:
        alpha = ctx.convert(kind.alpha)
        log_value = ctx.loggamma(alpha + k + 1)
        if normalized:
            log_value -= ctx.loggamma(alpha + 1)
    if log_value > ctx.max_log:
        return LogMoment(log_value)
    return ctx.exp(log_value)


def hermite_polynomial(n: int, x: Real, ctx: Optional[ScalarContext] = None) -> Tuple[Real, Real]:
    """H_n(x) and H_n'(x) by the three-term recurrence."""
    ctx = ctx or get_context()
    previous, current = ctx.zero, ctx.one
    for k in range(n):
        previous, current = current, 2 * x * current - 2 * k * previous
    return current, 2 * n * previous


def laguerre_polynomial(n: int, alpha: Real, x: Real, ctx: Optional[ScalarContext] = None) -> Tuple[Real, Real]:
    """L_n^(α)(x) and its x-derivative by the three-term recurrence."""
    ctx = ctx or get_context()
    alpha = ctx.convert(alpha)
    previous, current = ctx.zero, ctx.one
    for k in range(n):
        previous, current = current, ((2 * k + alpha + 1 - x) * current - (k + alpha) * previous) / (k + 1)
    # x L_n' = n L_n - (n+α) L_{n-1}
    return current, (n * current - (n + alpha) * previous) / x
