"""
Barycentric interpolation weights on the nodes of a finished rule.

v_i = 1/p'(x_i) for the node polynomial p, rescaled so that max |v_i| = 1.
They come out of the stored derivatives without forming any product over
node differences, so they stay finite for large n.
"""

from typing import Any, Callable, List, Sequence, Tuple

from gaussquad.core.scalar import Real, ScalarContext
from gaussquad.core.schemas import QuadratureRule, RuleFamily


def _sign(value: Real) -> int:
    return 1 if value > 0 else -1


def _normalize(ctx: ScalarContext, logs: List[Real], signs: List[int]) -> Tuple[Real, ...]:
    top = max(logs)
    return tuple(s * ctx.exp(l - top) for l, s in zip(logs, signs))


def _laguerre_logs(ctx: ScalarContext, alpha: Real, nodes: Sequence[Real], derivatives: Sequence[Real]) -> List[Real]:
    # log|1/L'(x_i)| up to a common constant
    power = (alpha + ctx.convert(3) / 2) / 2
    return [power * ctx.log(x) - x / 2 - ctx.log(abs(d)) for x, d in zip(nodes, derivatives)]


def interpolation_nodes(rule: QuadratureRule) -> Tuple[Real, ...]:
    """Nodes the weights refer to; Radau rules lead with the boundary node 0."""
    if rule.kind.family == RuleFamily.RADAU_LAGUERRE:
        return (rule.context().zero,) + tuple(rule.nodes)
    return tuple(rule.nodes)


def barycentric_weights(rule: QuadratureRule) -> Tuple[Real, ...]:
    """
    Barycentric weights for the rule's nodes (see interpolation_nodes).

    Hermite: log|v_i| = -x_i²/2 - log|y'_i|. Laguerre:
    log|v_i| = (α+3/2)/2 log x_i - x_i/2 - log|y'_i|, signs from y'.
    For Radau rules the internal part uses α+1 and the boundary node gets
    1/L_n^(α+1)(0), tied to the internal ones through the Gauss weight at
    the reference node.
    """
    if not rule.derivatives:
        raise ValueError("rule carries no derivatives; barycentric weights need them")
    if any(d == 0 for d in rule.derivatives):
        raise ValueError("a node derivative is zero")
    ctx = rule.context()
    family = rule.kind.family
    signs = [_sign(d) for d in rule.derivatives]

    if family == RuleFamily.HERMITE:
        logs = [-x * x / 2 - ctx.log(abs(d)) for x, d in zip(rule.nodes, rule.derivatives)]
        return _normalize(ctx, logs, signs)

    alpha = ctx.convert(rule.kind.alpha)
    if family == RuleFamily.LAGUERRE:
        return _normalize(ctx, _laguerre_logs(ctx, alpha, rule.nodes, rule.derivatives), signs)

    return _radau_weights(ctx, rule, alpha + 1, signs)


def _radau_weights(ctx: ScalarContext, rule: QuadratureRule, shifted: Real, signs: List[int]) -> Tuple[Real, ...]:
    n = rule.n
    nodes = rule.nodes
    logs = _laguerre_logs(ctx, shifted, nodes, rule.derivatives)

    # normalized Gauss weights of the α+1 rule: w_i = binom(n+α+1, n) / (x_i L'(x_i)²)
    log_binomial = ctx.loggamma(n + shifted + 1) - ctx.loggamma(ctx.convert(n + 1)) - ctx.loggamma(shifted + 1)
    j = _reference_index(rule)
    inner_weight = rule.weights[j] * nodes[j] / shifted
    exact_log = (ctx.log(nodes[j]) + ctx.log(inner_weight) - log_binomial) / 2
    offset = exact_log - logs[j]

    # L'(x) at the largest zero has the sign of the leading coefficient, (-1)^n
    flip = signs[-1] * (1 if n % 2 == 0 else -1)
    internal = [l + offset - ctx.log(x) for l, x in zip(logs, nodes)]
    internal_signs = [s * flip for s in signs]
    return _normalize(ctx, [-log_binomial] + internal, [1] + internal_signs)


def _reference_index(rule: QuadratureRule) -> int:
    if rule.reference_node is not None:
        for i, x in enumerate(rule.nodes):
            if x == rule.reference_node:
                return i
    return max(range(rule.n), key=lambda i: rule.weights[i])


def barycentric_interpolate(rule: QuadratureRule, values: Sequence[Any], x: Real,
                            weights: Sequence[Real] = ()) -> Real:
    """
    Evaluate the interpolant of `values` (given at interpolation_nodes(rule)) at x.

    Uses the second barycentric form; returns the data value when x is a node.
    """
    nodes = interpolation_nodes(rule)
    if len(values) != len(nodes):
        raise ValueError(f"expected {len(nodes)} values, got {len(values)}")
    weights = weights or barycentric_weights(rule)
    ctx = rule.context()
    numerator = ctx.zero
    denominator = ctx.zero
    for node, v, f in zip(nodes, weights, values):
        difference = x - node
        if difference == 0:
            return f
        term = v / difference
        numerator += term * f
        denominator += term
    return numerator / denominator


def interpolate_function(rule: QuadratureRule, f: Callable[[Real], Real]) -> Callable[[Real], Real]:
    """Interpolant of f on the rule's nodes as a callable."""
    nodes = interpolation_nodes(rule)
    values = [f(x) for x in nodes]
    weights = barycentric_weights(rule)
    return lambda x: barycentric_interpolate(rule, values, x, weights)
