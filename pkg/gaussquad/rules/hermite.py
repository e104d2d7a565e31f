"""
Gauss–Hermite rules.

The sweep works on y(x) = λ e^{-x²/2} H_n(x), which satisfies
y'' + (2n+1-x²) y = 0. Starting at x = 0 with exact values (y, y') = (1, 0)
for even n and (0, 1) for odd n, the positive zeros are computed in
increasing order, each Taylor evaluation re-centered at the latest iterate.
The negative half of the rule follows by symmetry.
"""

import time
from typing import Iterator, List, Optional, Tuple

from gaussquad.core.config import get_settings
from gaussquad.core.errors import TermLimitExceeded, ZeroDerivative
from gaussquad.core.scalar import Real, ScalarContext, get_context
from gaussquad.core.schemas import QuadratureKind, QuadratureRule
from gaussquad.rules.series import TermLimits, sum_taylor
from gaussquad.solver.fixed_point import (
    CoefficientModel,
    MonotonicInterval,
    Monotonicity,
    StepOrdering,
    StopRule,
    SweepState,
    sweep,
)
from gaussquad.utils.logging import LoggerMixin, get_logger

logger = get_logger(__name__)


class HermiteCoefficient:
    """A(x) = 2n + 1 - x², decreasing for x > 0."""

    def __init__(self, ctx: ScalarContext, n: int):
        self.ctx = ctx
        self.n = n
        self.a0 = ctx.convert(2 * n + 1)

    def __call__(self, x: Real) -> Real:
        return self.a0 - x * x

    def derivative(self, x: Real) -> Real:
        return -2 * x

    def model(self) -> CoefficientModel:
        return CoefficientModel(
            self.ctx,
            self,
            self.derivative,
            [MonotonicInterval(self.ctx.zero, self.ctx.inf, Monotonicity.DECREASING)],
        )


class HermiteTaylorState:
    """Values (y, y') at a center; higher derivatives follow from the ODE."""

    __slots__ = ("ctx", "n", "center", "value", "derivative")

    def __init__(self, ctx: ScalarContext, n: int, center: Real, value: Real, derivative: Real):
        self.ctx = ctx
        self.n = n
        self.center = center
        self.value = value
        self.derivative = derivative

    def derivatives(self, order: int) -> List[Real]:
        """y^(0..order) at the center from y^(k+2) = -A y^(k) + 2kx y^(k-1) + k(k-1) y^(k-2)."""
        x = self.center
        a = (2 * self.n + 1) - x * x
        table = [self.value, self.derivative]
        for k in range(order - 1):
            nxt = -a * table[k]
            if k >= 1:
                nxt += 2 * k * x * table[k - 1]
            if k >= 2:
                nxt += k * (k - 1) * table[k - 2]
            table.append(nxt)
        return table[: order + 1]

    def scaled_terms(self, h: Real) -> Iterator[Real]:
        """u_k = y^(k) h^k / k!, generated from the scaled form of the recurrence."""
        x = self.center
        a = (2 * self.n + 1) - x * x
        h2 = h * h
        c0 = -a * h2
        c1 = 2 * x * h2 * h
        c2 = h2 * h2
        back2, back1 = self.ctx.zero, self.ctx.zero
        current, ahead = self.value, self.derivative * h
        yield current
        yield ahead
        k = 0
        while True:
            # u_{k+2} from u_k, u_{k-1}, u_{k-2}
            new = (c0 * current + c1 * back1 + c2 * back2) / ((k + 1) * (k + 2))
            yield new
            back2, back1, current, ahead = back1, current, ahead, new
            k += 1


def hermite_initial_state(n: int, ctx: Optional[ScalarContext] = None) -> HermiteTaylorState:
    """Exact starting values at x = 0: (1, 0) for even n, (0, 1) for odd n."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context()
    if n % 2 == 0:
        return HermiteTaylorState(ctx, n, ctx.zero, ctx.one, ctx.zero)
    return HermiteTaylorState(ctx, n, ctx.zero, ctx.zero, ctx.one)


def hermite_taylor_eval(
    state: HermiteTaylorState,
    target: Real,
    tol: Optional[Real] = None,
    term_limits: Optional[TermLimits] = None,
    step: Optional[Real] = None
) -> Tuple[Real, Real, HermiteTaylorState, int]:
    """
    Evaluate (y, y') at target by the Taylor series around state.center.

    Args:
        state: Current center and values
        target: New center, already rounded to working precision
        tol: Relative truncation tolerance (default 10^-D)
        term_limits: Minimum and maximum number of terms
        step: Raw step to use instead of target - center (regression checks only)

    Returns:
        (y, y', state re-centered at target, terms used)
    """
    ctx = state.ctx
    h = target - state.center if step is None else step
    if h == 0:
        return state.value, state.derivative, HermiteTaylorState(ctx, state.n, target, state.value, state.derivative), 1
    tol = ctx.series_tolerance if tol is None else tol
    limits = term_limits or TermLimits.for_digits(ctx.digits)
    value, slope, terms = sum_taylor(ctx, state.scaled_terms(h), h, tol, limits, point=target)
    return value, slope, HermiteTaylorState(ctx, state.n, target, value, slope), terms


class HermiteEvaluator(LoggerMixin):
    """Evaluator for the Hermite sweep, walking the Taylor state from iterate to iterate."""

    def __init__(
        self,
        state: HermiteTaylorState,
        ordering: StepOrdering = StepOrdering.DIFFERENCE,
        term_limits: Optional[TermLimits] = None
    ):
        self.state = state
        self.ordering = ordering
        self.limits = term_limits or TermLimits.for_digits(state.ctx.digits)
        self.tol = state.ctx.series_tolerance

    @property
    def center(self) -> Real:
        return self.state.center

    @property
    def value(self) -> Real:
        return self.state.value

    @property
    def derivative(self) -> Real:
        return self.state.derivative

    def _step(self, target: Real, step: Optional[Real]) -> int:
        _, _, self.state, terms = hermite_taylor_eval(self.state, target, self.tol, self.limits, step)
        return terms

    def move_to(self, target: Real, increment: Optional[Real] = None) -> int:
        step = increment if self.ordering is StepOrdering.INCREMENT else None
        try:
            return self._step(target, step)
        except TermLimitExceeded:
            self.logger.warning(f"Term limit hit stepping {self.state.center} -> {target}; halving once")
            middle = self.state.center + (target - self.state.center) / 2
            return self._step(middle, None) + self._step(target, None)


def hermite_nodes(
    n: int,
    ctx: Optional[ScalarContext] = None,
    stop: Optional[StopRule] = None,
    ordering: StepOrdering = StepOrdering.DIFFERENCE,
    record_iterates: bool = False
) -> SweepState:
    """Positive zeros α_1 < ... < α_{⌊n/2⌋} of H_n with y' at each, and statistics."""
    ctx = ctx or get_context()
    state = hermite_initial_state(n, ctx)
    stop = stop or StopRule(ctx)
    count = n // 2
    if count == 0:
        return SweepState(state.center, 1)
    evaluator = HermiteEvaluator(state, ordering=ordering)
    return sweep(
        ctx, evaluator, HermiteCoefficient(ctx, n).model(), stop, 1,
        count=count, ordering=ordering, record_iterates=record_iterates,
    )


def assemble_nodes(ctx: ScalarContext, n: int, positive: List[Real]) -> Tuple[Real, ...]:
    """Full ascending node set from the positive half."""
    middle = [ctx.zero] if n % 2 else []
    return tuple([-x for x in reversed(positive)] + middle + list(positive))


def assemble_derivatives(ctx: ScalarContext, n: int, positive: List[Real]) -> Tuple[Real, ...]:
    """y'(-x) = (-1)^(n+1) y'(x); y'(0) = 1 for odd n."""
    sign = 1 if n % 2 else -1
    middle = [ctx.one] if n % 2 else []
    return tuple([sign * d for d in reversed(positive)] + middle + list(positive))


def hermite_weights(
    ctx: ScalarContext,
    n: int,
    nodes: List[Real],
    derivatives: List[Real],
    normalization: Optional[str] = None
) -> Tuple[Tuple[Real, ...], Tuple[Real, ...]]:
    """
    Weights and scaled weights of the full rule from the positive half.

    w̄_i = |y'(α_i)|^-2 e^{-α_i²}. With the default "mu1" normalization the
    constant is fixed by Σ w_i x_i² = √π/2, with "mu0" by Σ w_i = √π.

    Returns:
        (weights, scaled weights), both in ascending node order
    """
    normalization = normalization or get_settings().hermite_normalization
    if normalization not in ("mu1", "mu0"):
        raise ValueError(f"unknown Hermite normalization {normalization!r}")
    if any(d == 0 for d in derivatives):
        raise ZeroDerivative("a Hermite node carries y' = 0")

    scaled_bar = [1 / (d * d) for d in derivatives]
    weight_bar = [s * ctx.exp_neg_square(x) for s, x in zip(scaled_bar, nodes)]
    odd = n % 2 == 1
    root_pi = ctx.sqrt(ctx.pi)

    if normalization == "mu1" and nodes:
        first_moment = 2 * ctx.fsum(w * x * x for w, x in zip(weight_bar, nodes))
        constant = 2 * first_moment / root_pi
    else:
        # y'(0) = 1 exactly, so the zero node contributes 1 to both sums
        total = 2 * ctx.fsum(weight_bar) + (ctx.one if odd else ctx.zero)
        constant = total / root_pi

    def finish(values: List[Real], zero_value: Real) -> Tuple[Real, ...]:
        half = [v / constant for v in values]
        middle = [zero_value / constant] if odd else []
        return tuple(list(reversed(half)) + middle + half)

    weights = finish(weight_bar, ctx.one)
    scaled = finish(scaled_bar, ctx.one)
    weights = tuple(ctx.zero if w < ctx.tiny else w for w in weights)
    return weights, scaled


def gauss_hermite(
    n: int,
    ctx: Optional[ScalarContext] = None,
    digits: Optional[int] = None,
    normalization: Optional[str] = None,
    stop: Optional[StopRule] = None,
    ordering: StepOrdering = StepOrdering.DIFFERENCE
) -> QuadratureRule:
    """
    Build the n-point Gauss–Hermite rule for the weight e^{-x²}.

    Args:
        n: Degree (>= 1)
        ctx: Scalar context; defaults to get_context(digits)
        digits: Working digits when no context is given
        normalization: "mu1" (default) or "mu0"
        stop: Custom stopping rule
        ordering: Taylor step formation (DIFFERENCE unless checking regressions)

    Returns:
        QuadratureRule with unscaled weights summing to √π
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context(digits)
    started = time.perf_counter()
    logger.info(f"Gauss-Hermite n={n} at {ctx.digits} digits ({ctx.backend})")

    result = hermite_nodes(n, ctx, stop=stop, ordering=ordering)
    weights, scaled = hermite_weights(ctx, n, result.nodes, result.derivatives, normalization)
    rule = QuadratureRule(
        kind=QuadratureKind.hermite(),
        n=n,
        backend=ctx.backend,
        precision_bits=ctx.bits,
        digits=ctx.digits,
        nodes=assemble_nodes(ctx, n, result.nodes),
        weights=weights,
        scaled_weights=scaled,
        derivatives=assemble_derivatives(ctx, n, result.derivatives),
        stats=result.stats,
    )
    logger.info(
        f"Gauss-Hermite n={n} done in {time.perf_counter() - started:.3f}s: "
        f"{result.stats.mean_iterations:.2f} iterations, {result.stats.mean_terms:.1f} terms per node"
    )
    return rule
