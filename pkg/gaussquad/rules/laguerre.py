"""
Gauss–Laguerre and Radau–Laguerre rules.

Everything runs in the variable z = √x, where
y(z) = z^{α+1/2} e^{-z²/2} L_n^{(α)}(z²) satisfies ÿ + A(z) y = 0 with
A(z) = -z² + 2L + (1/4 - α²)/z², L = 2n + α + 1.

For |α| <= 1/2, A decreases on z > 0 and one forward sweep from √x_l finds
every zero. Otherwise A peaks at z_e = (α² - 1/4)^{1/4}: zeros above z_e are
found by a forward sweep, the rest by a backward sweep from z_e. Values are
seeded by the continued fraction for y'/y and then carried by Taylor series
so that all derivatives share one normalization.
"""

import math
import time
from decimal import Decimal
from typing import Any, Iterator, List, NamedTuple, Optional, Tuple

from gaussquad.core.config import get_settings
from gaussquad.core.errors import (
    CFNoConvergence,
    CountMismatch,
    InconsistentNormalization,
    OutsideDisc,
    RatioBlowup,
    TermLimitExceeded,
    ZeroDerivative,
)
from gaussquad.core.scalar import Real, ScalarContext, get_context
from gaussquad.core.schemas import IterationStats, QuadratureKind, QuadratureRule
from gaussquad.rules.series import TermLimits, sum_taylor
from gaussquad.solver.fixed_point import (
    CoefficientModel,
    MonotonicInterval,
    Monotonicity,
    StopRule,
    sweep,
)
from gaussquad.utils.logging import LoggerMixin, get_logger

logger = get_logger(__name__)


class ZeroBounds(NamedTuple):
    """All zeros of L_n^(α) lie in (lower, upper); lower = p / upper."""
    lower: Real
    upper: Real
    p: Real


class LaguerreCoefficient:
    """Coefficient A(z) of the Laguerre normal form and its landmarks."""

    def __init__(self, ctx: ScalarContext, n: int, alpha: Real):
        self.ctx = ctx
        self.n = n
        self.alpha = alpha
        self.L = 2 * n + alpha + 1
        self.c = ctx.convert(1) / 4 - alpha * alpha

    @property
    def has_extremum(self) -> bool:
        return self.c < 0

    @property
    def x_extremum(self) -> Optional[Real]:
        return self.ctx.sqrt(-self.c) if self.has_extremum else None

    @property
    def z_extremum(self) -> Optional[Real]:
        return self.ctx.sqrt(self.ctx.sqrt(-self.c)) if self.has_extremum else None

    @property
    def x_right(self) -> Real:
        """Right end of the region where A > 0."""
        return self.L + self.ctx.sqrt(self.L * self.L + self.c)

    @property
    def x_left(self) -> Real:
        """Left end of the region where A > 0 (not positive when |α| <= 1/2)."""
        return -self.c / self.x_right

    def __call__(self, z: Real) -> Real:
        z2 = z * z
        return -z2 + 2 * self.L + self.c / z2

    def derivative(self, z: Real) -> Real:
        return -2 * z - 2 * self.c / (z * z * z)

    def model(self) -> CoefficientModel:
        ctx = self.ctx
        if not self.has_extremum:
            partition = [MonotonicInterval(ctx.zero, ctx.inf, Monotonicity.DECREASING)]
        else:
            z_e = self.z_extremum
            partition = [
                MonotonicInterval(ctx.zero, z_e, Monotonicity.INCREASING),
                MonotonicInterval(z_e, ctx.inf, Monotonicity.DECREASING),
            ]
        return CoefficientModel(ctx, self, self.derivative, partition, extremum=self.z_extremum)


def laguerre_bounds(ctx: ScalarContext, n: int, alpha: Real) -> ZeroBounds:
    """Lower and upper bounds for the zeros of L_n^(α)."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    a1 = alpha + 1
    root = ctx.sqrt(n * n + (n + 2) * a1)
    upper = (2 * n * n + n * (alpha - 1) + 2 * a1 + 2 * (n - 1) * root) / (n + 2)
    p = a1 * (n * (alpha + 5) + 2 * (alpha - 1)) / (n + 2)
    return ZeroBounds(p / upper, upper, p)


def laguerre_ratio_recurrence(ctx: ScalarContext, n: int, alpha: Real, x: Real) -> Real:
    """
    y'/y at z = √x from the ratios R_k = L_{k+1}^(α)(x) / L_k^(α)(x).

    Intended for small degrees only; the forward ratios lose accuracy as n grows.
    """
    ratio = alpha + 1 - x
    for k in range(1, n):
        if ratio == 0:
            raise RatioBlowup(f"ratio R_{k - 1} vanished at x = {x}", point=x)
        ratio = ((2 * k + alpha + 1 - x) - (k + alpha) / ratio) / (k + 1)
    if ratio == 0:
        raise RatioBlowup(f"ratio R_{n - 1} vanished at x = {x}", point=x)
    z = ctx.sqrt(x)
    return (2 * n + alpha + ctx.convert(1) / 2) / z - z - 2 * (n + alpha) / (z * ratio)


def laguerre_cf_ratio(
    ctx: ScalarContext,
    n: int,
    alpha: Real,
    x: Real,
    tol: Optional[Real] = None,
    max_depth: Optional[int] = None
) -> Tuple[Real, int]:
    """
    r = L_n^(α)(x) / L_n^(α-1)(x) by its continued fraction.

    r = a_0/(b_0 + a_1/(b_1 + ...)) with a_m = -(n+α+m)/x and
    b_m = -(1 + (α+m)/x), evaluated with the modified Lentz scheme.

    Returns:
        (r, number of partial quotients used)
    """
    tol = ctx.series_tolerance if tol is None else tol
    if max_depth is None:
        # convergence only sets in once m is comparable with x + α + n
        max_depth = get_settings().cf_depth + 4 * int(math.ceil(float(x + abs(alpha)) + n))
    tiny = ctx.power10(-(2 * ctx.digits + 30))

    def a(m: int) -> Real:
        return -(n + alpha + m) / x

    def b(m: int) -> Real:
        return -(1 + (alpha + m) / x)

    g = b(0)
    if g == 0:
        g = tiny
    c = g
    d = ctx.zero
    for m in range(1, max_depth + 1):
        d = b(m) + a(m) * d
        if d == 0:
            d = tiny
        c = b(m) + a(m) / c
        if c == 0:
            c = tiny
        d = 1 / d
        delta = c * d
        g *= delta
        if abs(delta - 1) < tol:
            return a(0) / g, m
    raise CFNoConvergence(f"continued fraction not converged after {max_depth} terms at x = {x}",
                          point=x, depth=max_depth)


def laguerre_ratio_cf(
    ctx: ScalarContext,
    n: int,
    alpha: Real,
    x: Real,
    tol: Optional[Real] = None,
    max_depth: Optional[int] = None
) -> Real:
    """y'/y at z = √x from the continued fraction; infinite at a zero of y."""
    r, _ = laguerre_cf_ratio(ctx, n, alpha, x, tol, max_depth)
    if r == 0:
        return ctx.inf
    z = ctx.sqrt(x)
    return (ctx.convert(1) / 2 - alpha) / z - z + 2 * (n + alpha) / (z * r)


class LaguerreTaylorState:
    """Values (y, ẏ) at a center z > 0 of the Laguerre normal form."""

    __slots__ = ("ctx", "n", "alpha", "center", "value", "derivative")

    def __init__(self, ctx: ScalarContext, n: int, alpha: Real, center: Real, value: Real, derivative: Real):
        if not center > 0:
            raise ValueError(f"Laguerre Taylor centers must be positive, got {center}")
        self.ctx = ctx
        self.n = n
        self.alpha = alpha
        self.center = center
        self.value = value
        self.derivative = derivative

    def _coefficients(self) -> Tuple[Real, Real, Real, Real, Real]:
        z = self.center
        z2 = z * z
        big_l = 2 * self.n + self.alpha + 1
        q = -z2 * z2 + 2 * big_l * z2 + (self.ctx.convert(1) / 4 - self.alpha * self.alpha)
        q1 = -4 * z2 * z + 4 * big_l * z
        half_q2 = -6 * z2 + 2 * big_l
        sixth_q3 = -4 * z
        return z2, q, q1, half_q2, sixth_q3

    def derivatives(self, order: int) -> List[Real]:
        """ÿ and higher orders from the seven-term recurrence of z² ÿ + Q y = 0."""
        z = self.center
        z2, q, q1, half_q2, sixth_q3 = self._coefficients()
        q2 = 2 * half_q2
        q3 = 6 * sixth_q3
        q4 = -24
        table = [self.value, self.derivative]
        for j in range(order - 1):
            acc = 2 * j * z * table[j + 1] + (j * (j - 1) + q) * table[j]
            if j >= 1:
                acc += j * q1 * table[j - 1]
            if j >= 2:
                acc += math.comb(j, 2) * q2 * table[j - 2]
            if j >= 3:
                acc += math.comb(j, 3) * q3 * table[j - 3]
            if j >= 4:
                acc += math.comb(j, 4) * q4 * table[j - 4]
            table.append(-acc / z2)
        return table[: order + 1]

    def scaled_terms(self, h: Real) -> Iterator[Real]:
        """u_k = y^(k) h^k / k! for the step h."""
        z = self.center
        z2, q, q1, half_q2, sixth_q3 = self._coefficients()
        h2 = h * h
        h3 = h2 * h
        h4 = h2 * h2
        k3 = q1 * h3
        k4 = half_q2 * h4
        k5 = sixth_q3 * h4 * h
        k6 = -(h3 * h3)
        zh = z * h
        zero = self.ctx.zero
        m4 = m3 = m2 = m1 = zero
        current, ahead = self.value, self.derivative * h
        yield current
        yield ahead
        j = 0
        while True:
            acc = (2 * j * (j + 1)) * zh * ahead + (j * (j - 1) + q) * h2 * current
            acc += k3 * m1 + k4 * m2 + k5 * m3 + k6 * m4
            new = -acc / (z2 * ((j + 1) * (j + 2)))
            yield new
            m4, m3, m2, m1, current, ahead = m3, m2, m1, current, ahead, new
            j += 1


def laguerre_taylor_eval(
    state: LaguerreTaylorState,
    target: Real,
    tol: Optional[Real] = None,
    term_limits: Optional[TermLimits] = None
) -> Tuple[Real, Real, LaguerreTaylorState, int]:
    """
    Evaluate (y, ẏ) at target by the Taylor series around state.center.

    Raises:
        OutsideDisc: |target - center| >= center, beyond the singularity at z = 0
    """
    ctx = state.ctx
    h = target - state.center
    if h == 0:
        return state.value, state.derivative, state, 1
    if not abs(h) < state.center:
        raise OutsideDisc(f"target {target} outside the disc around {state.center}", point=target)
    tol = ctx.series_tolerance if tol is None else tol
    limits = term_limits or TermLimits.for_digits(ctx.digits)
    value, slope, terms = sum_taylor(ctx, state.scaled_terms(h), h, tol, limits, point=target)
    return value, slope, LaguerreTaylorState(ctx, state.n, state.alpha, target, value, slope), terms


class LaguerreTaylorEvaluator(LoggerMixin):
    """
    Taylor evaluator for Laguerre sweeps.

    Long moves are cut into steps of at most `disc_fraction` times the
    current center, which keeps each series well inside its disc.
    """

    def __init__(
        self,
        state: LaguerreTaylorState,
        term_limits: Optional[TermLimits] = None,
        disc_fraction: Optional[float] = None
    ):
        self.state = state
        self.limits = term_limits or TermLimits.for_digits(state.ctx.digits)
        self.tol = state.ctx.series_tolerance
        self.fraction = disc_fraction if disc_fraction is not None else get_settings().taylor_disc_fraction

    @property
    def center(self) -> Real:
        return self.state.center

    @property
    def value(self) -> Real:
        return self.state.value

    @property
    def derivative(self) -> Real:
        return self.state.derivative

    def _step(self, target: Real) -> int:
        try:
            _, _, self.state, terms = laguerre_taylor_eval(self.state, target, self.tol, self.limits)
            return terms
        except TermLimitExceeded:
            self.logger.warning(f"Term limit hit stepping {self.state.center} -> {target}; halving once")
            middle = self.state.center + (target - self.state.center) / 2
            _, _, self.state, first = laguerre_taylor_eval(self.state, middle, self.tol, self.limits)
            _, _, self.state, second = laguerre_taylor_eval(self.state, target, self.tol, self.limits)
            return first + second

    def move_to(self, target: Real, increment: Optional[Real] = None) -> int:
        terms = 0
        while True:
            reach = self.fraction * self.state.center
            h = target - self.state.center
            if abs(h) <= reach:
                return terms + self._step(target)
            terms += self._step(self.state.center + (reach if h > 0 else -reach))


class LaguerreRatioEvaluator(LoggerMixin):
    """
    Evaluator that knows only y'/y, from the continued fraction.

    Values come back as (h, 1) or (1, y'/y), whichever has the smaller
    first entry, so consecutive positions do not share a normalization.
    Falls back to the degree recurrence for n < 10.
    """

    def __init__(self, ctx: ScalarContext, n: int, alpha: Real, start: Real):
        self.ctx = ctx
        self.n = n
        self.alpha = alpha
        self.tol = ctx.series_tolerance
        self.center = start
        self.value = ctx.one
        self.derivative = ctx.zero
        self.move_to(start)

    def log_derivative(self, z: Real) -> Tuple[Real, int]:
        ctx = self.ctx
        x = z * z
        for attempt in range(2):
            try:
                r, depth = laguerre_cf_ratio(ctx, self.n, self.alpha, x, self.tol)
                if r == 0:
                    return ctx.inf, depth
                return (ctx.convert(1) / 2 - self.alpha) / z - z + 2 * (self.n + self.alpha) / (z * r), depth
            except CFNoConvergence:
                if self.n >= 10:
                    raise
                self.logger.warning(f"Continued fraction failed at x={x}; using the degree recurrence")
            try:
                return laguerre_ratio_recurrence(ctx, self.n, self.alpha, x), self.n
            except RatioBlowup:
                if attempt:
                    raise
                x = x * (1 + 8 * ctx.unit_roundoff)
                self.logger.warning(f"Degree ratio vanished; restarting at x={x}")
        raise RatioBlowup(f"no usable ratio at z = {z}", point=z)

    def move_to(self, target: Real, increment: Optional[Real] = None) -> int:
        ratio, depth = self.log_derivative(target)
        self.center = target
        if self.ctx.isinf(ratio):
            self.value, self.derivative = self.ctx.zero, self.ctx.one
        elif abs(ratio) <= 1:
            self.value, self.derivative = self.ctx.one, ratio
        else:
            self.value, self.derivative = 1 / ratio, self.ctx.one
        return depth


class LaguerreNodes:
    """
    Zeros in the z variable with derivatives under one normalization.

    Attributes:
        nodes: Ascending z_1..z_n
        derivatives: ẏ(z_i), None where no consistent value exists
        reference_index: Index of the node used to scale the weights
        seeds: Points where continued-fraction values entered the Taylor chain
        forward_count, backward_count: Nodes found above and below the start
        stats: Per-node iteration statistics
    """

    def __init__(self, nodes: List[Real], derivatives: List[Optional[Real]], reference_index: int,
                 seeds: List[Real], forward_count: int, backward_count: int, stats: IterationStats):
        self.nodes = nodes
        self.derivatives = derivatives
        self.reference_index = reference_index
        self.seeds = seeds
        self.forward_count = forward_count
        self.backward_count = backward_count
        self.stats = stats


def laguerre_nodes(
    n: int,
    alpha: Real,
    ctx: Optional[ScalarContext] = None,
    stop: Optional[StopRule] = None
) -> LaguerreNodes:
    """
    All n zeros of y(z) = z^{α+1/2} e^{-z²/2} L_n^(α)(z²) with consistent ẏ values.

    The continued fraction seeds a single point (z_e) for α >= 2. Below that
    it is used for the first two zeros above the start; the Taylor chain is
    then started at the second of them and the derivative at the first is
    recomputed from it.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context()
    alpha = ctx.convert(alpha)
    if not alpha > -1:
        raise ValueError(f"alpha must be > -1, got {alpha}")
    settings = get_settings()
    stop = stop or StopRule(ctx, confirmations=settings.laguerre_confirmations)

    coefficient = LaguerreCoefficient(ctx, n, alpha)
    model = coefficient.model()
    bounds = laguerre_bounds(ctx, n, alpha)
    z_lower = ctx.sqrt(bounds.lower)
    z_upper = ctx.sqrt(bounds.upper)
    backward = coefficient.has_extremum
    if backward:
        start = coefficient.z_extremum
    else:
        start = z_lower * (1 - 16 * ctx.unit_roundoff)

    ratio = LaguerreRatioEvaluator(ctx, n, alpha, start)
    if ratio.value == 0 and not backward:
        start = start * (1 - ctx.unit_roundoff)
        logger.debug(f"Start point is a zero; moved to {start}")
        ratio.move_to(start)

    stats = IterationStats()
    cf_nodes = min(2, n) if alpha < 2 else 0
    logger.debug(f"Laguerre n={n} alpha={alpha}: start {start}, backward={backward}, cf nodes={cf_nodes}")

    ratio_nodes: List[Real] = []
    exhausted = False
    if cf_nodes:
        phase = sweep(ctx, ratio, model, stop, 1, count=cf_nodes, bound=z_upper,
                      settle_at_start=not backward)
        stats.extend(phase.stats)
        ratio_nodes = list(phase.nodes)
        exhausted = phase.exhausted

    seed_point = ratio_nodes[-1] if ratio_nodes else start
    if ratio.center != seed_point:
        ratio.move_to(seed_point)
    seed = LaguerreTaylorState(ctx, n, alpha, seed_point, ratio.value, ratio.derivative)

    forward_nodes: List[Real] = list(ratio_nodes)
    forward_derivatives: List[Optional[Real]] = [None] * len(ratio_nodes)
    if ratio_nodes:
        forward_derivatives[-1] = seed.derivative

    rejoin = LaguerreTaylorEvaluator(seed)
    if len(ratio_nodes) == 2:
        rejoin.move_to(ratio_nodes[0])
        forward_derivatives[0] = rejoin.derivative
    if backward and rejoin.center != start:
        rejoin.move_to(start)
    start_state = rejoin.state

    if not exhausted and len(forward_nodes) < n:
        phase = sweep(ctx, LaguerreTaylorEvaluator(seed), model, stop, 1,
                      count=n - len(forward_nodes), bound=z_upper, start_at_node=bool(ratio_nodes),
                      settle_at_start=not backward)
        stats.extend(phase.stats)
        forward_nodes.extend(phase.nodes)
        forward_derivatives.extend(phase.derivatives)

    backward_nodes: List[Real] = []
    backward_derivatives: List[Optional[Real]] = []
    remaining = n - len(forward_nodes)
    if backward and remaining > 0:
        phase = sweep(ctx, LaguerreTaylorEvaluator(start_state), model, stop, -1,
                      count=remaining, lower_bracket=z_lower)
        stats.extend(phase.stats)
        backward_nodes = list(reversed(phase.nodes))
        backward_derivatives = list(reversed(phase.derivatives))

    nodes = backward_nodes + forward_nodes
    if len(nodes) != n:
        raise CountMismatch(f"Laguerre n={n}, alpha={alpha}: sweeps produced {len(nodes)} nodes")

    if forward_nodes:
        reference_index = len(backward_nodes)
    else:
        reference_index = len(backward_nodes) - 1
    logger.debug(f"Laguerre sweeps: {len(forward_nodes)} forward, {len(backward_nodes)} backward")
    return LaguerreNodes(
        nodes=nodes,
        derivatives=backward_derivatives + forward_derivatives,
        reference_index=reference_index,
        seeds=[seed_point],
        forward_count=len(forward_nodes),
        backward_count=len(backward_nodes),
        stats=stats,
    )


def laguerre_weights(
    ctx: ScalarContext,
    alpha: Real,
    nodes: List[Real],
    derivatives: List[Optional[Real]],
    reference_index: int
) -> Tuple[Tuple[Real, ...], Tuple[Real, ...]]:
    """
    Weights normalized to one and scaled weights from ẏ at the z-nodes.

    ω̄_i = |ẏ_i|^-2 and w̄_i = ω̄_i exp(F_i), F_i = x_j - x_i + (α+1/2) log(x_i/x_j)
    with j the reference node; both are divided by λ = Σ w̄_i.
    """
    if any(d is None for d in derivatives):
        raise InconsistentNormalization("some node derivatives were never re-joined to the Taylor chain")
    if any(d == 0 for d in derivatives):
        raise ZeroDerivative("a Laguerre node carries y' = 0")
    alpha = ctx.convert(alpha)
    xs = [z * z for z in nodes]
    x_ref = xs[reference_index]
    power = alpha + ctx.convert(1) / 2
    scaled_bar = [1 / (d * d) for d in derivatives]
    weight_bar = [
        s * ctx.exp(x_ref - x + power * ctx.log(x / x_ref))
        for s, x in zip(scaled_bar, xs)
    ]
    total = ctx.fsum(weight_bar)
    weights = tuple(ctx.zero if w / total < ctx.tiny else w / total for w in weight_bar)
    scaled = tuple(s / total for s in scaled_bar)
    return weights, scaled


def gamma_scale(ctx: ScalarContext, alpha: Real) -> Optional[Real]:
    """Γ(α+1) when it is representable, else None."""
    log_gamma = ctx.loggamma(alpha + 1)
    if abs(log_gamma) < ctx.max_log:
        return ctx.exp(log_gamma)
    logger.warning(f"Gamma({alpha} + 1) is not representable; only normalized weights are available")
    return None


def _alpha_value(ctx: ScalarContext, alpha: Any) -> Tuple[Decimal, Real]:
    kind = QuadratureKind.laguerre(alpha)
    return kind.alpha, ctx.convert(kind.alpha)


def gauss_laguerre(
    n: int,
    alpha: Any = 0,
    ctx: Optional[ScalarContext] = None,
    digits: Optional[int] = None,
    stop: Optional[StopRule] = None
) -> QuadratureRule:
    """
    Build the n-point Gauss–Laguerre rule for the weight x^α e^{-x}.

    Args:
        n: Degree (>= 1)
        alpha: Parameter > -1 (int, float, decimal string or Decimal)
        ctx: Scalar context; defaults to get_context(digits)
        digits: Working digits when no context is given
        stop: Custom stopping rule

    Returns:
        QuadratureRule with weights normalized to one
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context(digits)
    exact_alpha, alpha_value = _alpha_value(ctx, alpha)
    started = time.perf_counter()
    logger.info(f"Gauss-Laguerre n={n} alpha={exact_alpha} at {ctx.digits} digits ({ctx.backend})")

    result = laguerre_nodes(n, alpha_value, ctx, stop)
    weights, scaled = laguerre_weights(ctx, alpha_value, result.nodes, result.derivatives,
                                       result.reference_index)
    x_nodes = tuple(z * z for z in result.nodes)
    rule = QuadratureRule(
        kind=QuadratureKind.laguerre(exact_alpha),
        n=n,
        backend=ctx.backend,
        precision_bits=ctx.bits,
        digits=ctx.digits,
        nodes=x_nodes,
        weights=weights,
        scaled_weights=scaled,
        derivatives=tuple(result.derivatives),
        weight_scale=gamma_scale(ctx, alpha_value),
        reference_node=x_nodes[result.reference_index],
        stats=result.stats,
    )
    logger.info(
        f"Gauss-Laguerre n={n} alpha={exact_alpha} done in {time.perf_counter() - started:.3f}s: "
        f"{result.stats.mean_iterations:.2f} iterations, {result.stats.mean_terms:.1f} terms per node"
    )
    return rule


def radau_laguerre(
    n: int,
    alpha: Any = 0,
    ctx: Optional[ScalarContext] = None,
    digits: Optional[int] = None,
    stop: Optional[StopRule] = None
) -> QuadratureRule:
    """
    Gauss–Radau–Laguerre rule with the fixed node x = 0.

    Internal nodes are the zeros of L_n^(α+1); with ŵ the normalized weights
    of that Gauss rule, the internal weights are ŵ_i (α+1)/x_i and the
    boundary weight is 1/binom(n+α+1, n), all normalized by Γ(α+1).
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    ctx = ctx or get_context(digits)
    exact_alpha, alpha_value = _alpha_value(ctx, alpha)
    shifted = alpha_value + 1
    logger.info(f"Gauss-Radau-Laguerre n={n} alpha={exact_alpha} at {ctx.digits} digits")

    inner = gauss_laguerre(n, exact_alpha + 1, ctx=ctx, stop=stop)
    weights = tuple(w * shifted / x for w, x in zip(inner.weights, inner.nodes))
    scaled = tuple(s * shifted / x for s, x in zip(inner.scaled_weights, inner.nodes))
    log_binomial = ctx.loggamma(n + alpha_value + 2) - ctx.loggamma(ctx.convert(n + 1)) - ctx.loggamma(shifted + 1)
    boundary = ctx.exp(-log_binomial)
    if boundary < ctx.tiny:
        boundary = ctx.zero

    return QuadratureRule(
        kind=QuadratureKind.radau_laguerre(exact_alpha),
        n=n,
        backend=ctx.backend,
        precision_bits=ctx.bits,
        digits=ctx.digits,
        nodes=inner.nodes,
        weights=weights,
        scaled_weights=scaled,
        derivatives=inner.derivatives,
        boundary_weight=boundary,
        weight_scale=gamma_scale(ctx, alpha_value),
        reference_node=inner.reference_node,
        stats=inner.stats,
    )


gauss_radau_laguerre = radau_laguerre
