"""
Fourth-order fixed-point iteration for zeros of y'' + A(z) y = 0.

Zeros are computed one after another in a sweep. Between consecutive zeros
the map T_j compares y with the solution of the same equation frozen at a
constant coefficient; when A is monotonic on the swept interval the iterates
approach the next zero monotonically and with fourth order convergence.
Function values come from an Evaluator that keeps one normalization across
the whole sweep, so the derivative at each node can later be turned into a
quadrature weight.
"""

from enum import Enum
from typing import Any, Callable, List, NamedTuple, Optional, Protocol, Tuple

from gaussquad.core.config import get_settings
from gaussquad.core.errors import (
    AtanhDomain,
    BoundViolation,
    DegenerateState,
    MaxIterationsExceeded,
    MonotonicityViolation,
    NonPositiveCoefficient,
)
from gaussquad.core.scalar import Real, ScalarContext
from gaussquad.core.schemas import IterationStats
from gaussquad.utils.logging import get_logger

logger = get_logger(__name__)


class Monotonicity(str, Enum):
    DECREASING = "decreasing"
    INCREASING = "increasing"

    @property
    def sign(self) -> int:
        """The j of T_j: the sign of A'."""
        return -1 if self is Monotonicity.DECREASING else 1


class MonotonicInterval(NamedTuple):
    lower: Real
    upper: Real
    direction: Monotonicity


class StepOrdering(str, Enum):
    """How the Taylor step h is formed from a new iterate."""
    DIFFERENCE = "difference"  # h = new - center, after rounding the iterate
    INCREMENT = "increment"    # h = raw increment (regression checks only)


class CoefficientModel:
    """
    Coefficient A of the normal form together with its monotonicity partition.

    Args:
        ctx: Scalar context the coefficient is evaluated in
        coefficient: z -> A(z)
        derivative: z -> A'(z), used for the convergence tail estimate
        partition: Ordered, disjoint intervals covering the sweep domain
        extremum: Point where A' changes sign, if any
    """

    def __init__(
        self,
        ctx: ScalarContext,
        coefficient: Callable[[Real], Real],
        derivative: Callable[[Real], Real],
        partition: List[MonotonicInterval],
        extremum: Optional[Real] = None
    ):
        if not partition:
            raise ValueError("partition needs at least one interval")
        for left, right in zip(partition, partition[1:]):
            if not left.upper == right.lower:
                raise ValueError("partition intervals must be contiguous and ordered")
        for interval in partition:
            if not interval.lower < interval.upper:
                raise ValueError("partition intervals must be non-empty")
        self.ctx = ctx
        self.coefficient = coefficient
        self.derivative = derivative
        self.partition = list(partition)
        self.extremum = extremum

    def __call__(self, z: Real) -> Real:
        return self.coefficient(z)

    @property
    def domain(self) -> Tuple[Real, Real]:
        return self.partition[0].lower, self.partition[-1].upper

    def direction_towards(self, z: Real, direction: int) -> Monotonicity:
        """Monotonicity of A just beside z on the side a sweep moves to."""
        for interval in self.partition:
            if direction > 0 and interval.lower <= z < interval.upper:
                return interval.direction
            if direction < 0 and interval.lower < z <= interval.upper:
                return interval.direction
        raise BoundViolation(f"point {z} outside the coefficient domain", point=z)

    def check_partition(self, samples: int = 16) -> bool:
        """Compare the declared directions with finite differences of A."""
        ctx = self.ctx
        for interval in self.partition:
            lower = interval.lower
            upper = interval.upper
            if ctx.isinf(upper):
                upper = lower + 8 * (abs(lower) + 1)
            width = upper - lower
            for k in range(1, samples):
                z = lower + width * k / samples
                delta = width / (8 * samples)
                difference = self.coefficient(z + delta) - self.coefficient(z - delta)
                if difference == 0:
                    continue
                if (difference > 0) != (interval.direction is Monotonicity.INCREASING):
                    return False
        return True

    def tail_bound(self, a: Real, b: Real, c: Real) -> Real:
        """K*|b - a|^4 with K = |A'(c)| / (12 |A(c)|^(3/2))."""
        coefficient = abs(self.coefficient(c))
        k = abs(self.derivative(c)) / (12 * coefficient * self.ctx.sqrt(coefficient))
        return k * abs(b - a) ** 4


class StopRule:
    """Stop once two consecutive iterates differ by less than 6^(1/4) 10^(-D/4)."""

    def __init__(
        self,
        ctx: ScalarContext,
        digits: Optional[int] = None,
        max_iterations: Optional[int] = None,
        confirmations: int = 0
    ):
        settings = get_settings()
        self.digits = digits if digits is not None else ctx.digits
        self.max_iterations = max_iterations if max_iterations is not None else settings.max_iterations
        if self.max_iterations < 5:
            raise ValueError(f"max_iterations must be >= 5, got {self.max_iterations}")
        if confirmations < 0:
            raise ValueError("confirmations cannot be negative")
        self.confirmations = confirmations
        self.threshold = ctx.sqrt(ctx.sqrt(ctx.convert(6))) * ctx.power10(ctx.convert(-self.digits) / 4)

    def converged(self, previous: Real, current: Real) -> bool:
        return abs(current - previous) < self.threshold


class Evaluator(Protocol):
    """
    Source of (y, y') along a sweep.

    `move_to` re-centers the evaluator at `target` and returns the number of
    terms it spent. `increment`, when given, is the raw step that produced
    `target`; evaluators honouring StepOrdering.INCREMENT use it as h.
    """

    center: Real
    value: Real
    derivative: Real

    def move_to(self, target: Real, increment: Optional[Real] = None) -> int: ...


class SweepState:
    """Running state of one sweep: nodes found so far and their statistics."""

    def __init__(self, start: Real, direction: int):
        self.start = start
        self.direction = direction
        self.nodes: List[Real] = []
        self.derivatives: List[Real] = []
        self.values: List[Real] = []
        self.iterates: List[List[Real]] = []
        self.stats = IterationStats()
        self.exhausted = False

    def accept(self, node: Real, value: Real, derivative: Real, iterations: int, terms: int,
               trace: Optional[List[Real]]) -> None:
        self.nodes.append(node)
        self.values.append(value)
        self.derivatives.append(derivative)
        self.stats.record(iterations, terms)
        if trace is not None:
            self.iterates.append(trace)

    @property
    def count(self) -> int:
        return len(self.nodes)


def arctan_branch(ctx: ScalarContext, j: int, zeta: Real) -> Real:
    """
    Branch-corrected arctangent.

    arctan(zeta) when j*zeta > 0, arctan(zeta) + j*pi when j*zeta <= 0 and
    j*pi/2 for zeta = ±inf.
    """
    if j not in (-1, 1):
        raise ValueError(f"j must be -1 or +1, got {j}")
    if ctx.isinf(zeta):
        return j * ctx.pi / 2
    angle = ctx.atan(zeta)
    if j * zeta > 0:
        return angle
    return angle + j * ctx.pi


def _ratio(ctx: ScalarContext, y: Real, yp: Real) -> Real:
    if yp == 0:
        if y == 0:
            raise DegenerateState("y and y' vanish simultaneously")
        return ctx.inf if y > 0 else -ctx.inf
    return y / yp


def t_increment(ctx: ScalarContext, y: Real, yp: Real, a: Real, j: int) -> Real:
    """T_j(z) - z, formed before it is added to z."""
    if not a > 0:
        raise NonPositiveCoefficient(f"A = {a} is not positive")
    root = ctx.sqrt(a)
    h = _ratio(ctx, y, yp)
    zeta = h if ctx.isinf(h) else root * h
    return -arctan_branch(ctx, j, zeta) / root


def t_increment_local(ctx: ScalarContext, y: Real, yp: Real, a: Real) -> Optional[Real]:
    """
    Principal-branch step -arctan(sqrt(A) y/y') / sqrt(A) towards the nearest zero.

    None where y' = 0, since no zero is near.
    """
    if not a > 0:
        raise NonPositiveCoefficient(f"A = {a} is not positive")
    if yp == 0:
        return None
    root = ctx.sqrt(a)
    return -ctx.atan(root * y / yp) / root


def t_step(ctx: ScalarContext, z: Real, y: Real, yp: Real, a: Real, j: int) -> Real:
    """T_j(z) = z - arctan_j(sqrt(A) y/y') / sqrt(A) for A(z) > 0."""
    return z + t_increment(ctx, y, yp, a, j)


def t_step_negative_increment(ctx: ScalarContext, y: Real, yp: Real, a: Real) -> Real:
    if not a < 0:
        raise ValueError(f"the atanh step needs A < 0, got {a}")
    if yp == 0:
        raise AtanhDomain("y' = 0 puts the atanh argument at infinity")
    root = ctx.sqrt(-a)
    argument = root * y / yp
    if not abs(argument) < 1:
        raise AtanhDomain(f"atanh argument {argument} outside (-1, 1)")
    return -ctx.atanh(argument) / root


def t_step_negative(ctx: ScalarContext, z: Real, y: Real, yp: Real, a: Real) -> Real:
    """Modified step z - atanh(sqrt(-A) y/y') / sqrt(-A) where A(z) < 0."""
    return z + t_step_negative_increment(ctx, y, yp, a)


class _PastBound(Exception):
    """Internal signal: the sweep ran past its bound without finding a zero."""


def sweep(
    ctx: ScalarContext,
    evaluator: Evaluator,
    model: CoefficientModel,
    stop: StopRule,
    direction: int,
    count: Optional[int] = None,
    bound: Optional[Real] = None,
    lower_bracket: Optional[Real] = None,
    ordering: StepOrdering = StepOrdering.DIFFERENCE,
    record_iterates: bool = False,
    start_at_node: bool = False,
    settle_at_start: bool = False
) -> SweepState:
    """
    Compute consecutive zeros starting from the evaluator's current center.

    Args:
        ctx: Scalar context
        evaluator: Positioned at the start point with (y, y') known there
        model: Coefficient model; A must be decreasing on the swept side for
            direction +1 and increasing for direction -1
        stop: Stopping rule
        direction: +1 sweeps towards larger z with T_{-1}, -1 towards smaller z with T_{+1}
        count: Number of zeros wanted
        bound: Forward sweeps end without a node once an iterate passes it
        lower_bracket: Point below every remaining zero, used to recover from
            an atanh-domain failure
        ordering: How Taylor steps are formed (DIFFERENCE in production)
        record_iterates: Keep every iterate of every node
        start_at_node: The start point is itself a zero; its step uses y = 0
        settle_at_start: No zero lies behind the start, so a start within
            rounding of a zero converges to it instead of passing it

    Returns:
        Final SweepState with nodes, derivatives and statistics

    Every step after the first one of a node is taken on the principal
    branch when that step is shorter than the stopping threshold. An iterate
    rounded just past its zero then steps back to it; the shifted branch
    would carry it on to the following zero.
    """
    if direction not in (-1, 1):
        raise ValueError(f"direction must be -1 or +1, got {direction}")
    if count is None and bound is None:
        raise ValueError("a sweep needs a count or a bound")

    start = evaluator.center
    expected = Monotonicity.DECREASING if direction > 0 else Monotonicity.INCREASING
    found = model.direction_towards(start, direction)
    if found is not expected:
        raise ValueError(f"A is {found.value} beside {start}; direction {direction} needs {expected.value}")

    j = expected.sign
    lower, upper = model.domain
    limit = None if bound is None else bound * (1 + 64 * ctx.unit_roundoff)
    state = SweepState(start, direction)
    logger.debug(f"Sweep from {start} direction {direction} count={count} bound={bound}")

    def advance(z: Real, y: Real, yp: Real, bisected: List[bool], settle: bool) -> Tuple[Real, Real]:
        a = model(z)
        if a > 0:
            increment = t_increment(ctx, y, yp, a, j)
            if settle:
                local = t_increment_local(ctx, y, yp, a)
                if local is not None and abs(local) < stop.threshold:
                    increment = local
        elif a < 0:
            if direction > 0:
                # past the turning point, no zero remains ahead
                raise _PastBound()
            try:
                increment = t_step_negative_increment(ctx, y, yp, a)
            except AtanhDomain:
                if lower_bracket is None or bisected[0]:
                    raise
                bisected[0] = True
                target = (z + lower_bracket) / 2
                logger.warning(f"atanh domain left at z={z}; bisecting towards {lower_bracket}")
                return target, target - z
        else:
            increment = -_ratio(ctx, y, yp)
        new = z + increment
        if limit is not None and direction > 0 and new > limit:
            raise _PastBound()
        return new, increment

    at_node = start_at_node
    try:
        while count is None or state.count < count:
            bisected = [False]
            # from an accepted zero the step starts at y = 0, not at its rounded value
            y_start = ctx.zero if at_node else evaluator.value
            current, increment = advance(evaluator.center, y_start, evaluator.derivative, bisected,
                                         settle_at_start and not at_node)
            previous = evaluator.center
            trace = [current] if record_iterates else None
            iterations = 0
            terms = 0
            remaining: Optional[int] = None
            done = False
            while True:
                if not lower < current < upper or direction * (current - previous) < -stop.threshold:
                    raise BoundViolation(f"iterate {current} left the sweep domain", point=current)
                hint = increment if ordering is StepOrdering.INCREMENT else None
                terms += evaluator.move_to(current, hint)
                if done:
                    break
                following, increment = advance(current, evaluator.value, evaluator.derivative, bisected, True)
                iterations += 1
                if iterations > stop.max_iterations:
                    raise MaxIterationsExceeded(
                        f"no convergence after {stop.max_iterations} iterations near {current}",
                        point=current, iterations=iterations,
                    )
                if direction * (following - current) < -stop.threshold:
                    raise MonotonicityViolation(
                        f"iterate moved from {current} to {following} against direction {direction}",
                        point=following,
                    )
                if following == current:
                    done = True
                else:
                    if remaining is None and stop.converged(current, following):
                        remaining = stop.confirmations
                    if remaining is not None:
                        if remaining == 0:
                            done = True
                        else:
                            remaining -= 1
                previous, current = current, following
                if trace is not None:
                    trace.append(current)
            state.accept(current, evaluator.value, evaluator.derivative, iterations, terms, trace)
            at_node = True
    except _PastBound:
        state.exhausted = True

    logger.debug(
        f"Sweep done: {state.count} nodes, mean iterations {state.stats.mean_iterations:.2f}, "
        f"mean terms {state.stats.mean_terms:.1f}"
    )
    return state
