"""
Test the Golub-Welsch reference rules, moments and polynomial evaluators.
"""

import math
import sys
from pathlib import Path

import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from gaussquad.core.scalar import FloatContext, MPMathContext
from gaussquad.core.schemas import QuadratureKind
from gaussquad.oracle.golub_welsch import (
    JacobiMatrix,
    LogMoment,
    golub_welsch,
    hermite_polynomial,
    implicit_ql,
    jacobi_matrix,
    laguerre_polynomial,
    monomial_moment,
)

CTX = FloatContext()
ROOT_PI = math.sqrt(math.pi)
ROOT3 = math.sqrt(3.0)


@pytest.mark.parametrize("ctx", [FloatContext(), MPMathContext(digits=30)], ids=["scipy", "ql"])
def test_two_point_laguerre_rule(ctx):
    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.laguerre("1"), 2, ctx), ctx)
    assert_allclose([float(x) for x in nodes], [3 - ROOT3, 3 + ROOT3], rtol=1e-14)
    assert_allclose([float(w) for w in weights], [(3 + ROOT3) / 6, (3 - ROOT3) / 6], rtol=1e-14)


@pytest.mark.parametrize("ctx", [FloatContext(), MPMathContext(digits=30)], ids=["scipy", "ql"])
def test_small_hermite_rules(ctx):
    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.hermite(), 2, ctx), ctx)
    assert_allclose([float(x) for x in nodes], [-1 / math.sqrt(2), 1 / math.sqrt(2)], rtol=1e-14)
    assert_allclose([float(w) for w in weights], [ROOT_PI / 2, ROOT_PI / 2], rtol=1e-14)

    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.hermite(), 3, ctx), ctx)
    assert_allclose([float(x) for x in nodes], [-math.sqrt(1.5), 0.0, math.sqrt(1.5)], rtol=1e-14, atol=1e-15)
    assert_allclose([float(w) for w in weights], [ROOT_PI / 6, 2 * ROOT_PI / 3, ROOT_PI / 6], rtol=1e-14)


def test_normalized_laguerre_rule():
    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.laguerre("0"), 2, CTX, normalized=True))
    assert_allclose(nodes, [2 - math.sqrt(2), 2 + math.sqrt(2)], rtol=1e-14)
    assert_allclose(weights, [0.853553390593274, 0.146446609406726], rtol=1e-13)


def test_one_point_rules():
    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.laguerre("2.5"), 1, CTX))
    assert nodes == (3.5,)
    assert weights[0] == pytest.approx(math.gamma(3.5), rel=1e-14)
    nodes, weights = golub_welsch(jacobi_matrix(QuadratureKind.hermite(), 1, CTX))
    assert nodes == (0.0,)
    assert weights[0] == pytest.approx(ROOT_PI, rel=1e-15)


def test_radau_matrix_has_zero_eigenvalue():
    matrix = jacobi_matrix(QuadratureKind.radau_laguerre("0"), 1, CTX)
    assert matrix.size == 2
    assert matrix.diagonal == pytest.approx((1.0, 1.0))
    nodes, weights = golub_welsch(matrix)
    assert_allclose(nodes, [0.0, 2.0], atol=1e-15)
    assert_allclose(weights, [0.5, 0.5], rtol=1e-14)

    nodes, _ = golub_welsch(jacobi_matrix(QuadratureKind.radau_laguerre("1.5"), 9, CTX))
    assert abs(nodes[0]) < 1e-11


def test_ql_matches_scipy():
    matrix = jacobi_matrix(QuadratureKind.laguerre("0.5"), 12, CTX, normalized=True)
    values, first = implicit_ql(CTX, list(matrix.diagonal), list(matrix.off_diagonal))
    nodes, weights = golub_welsch(matrix)
    assert_allclose(values, nodes, rtol=1e-13)
    assert_allclose([v * v for v in first], weights, rtol=1e-10, atol=1e-15)


def test_high_precision_weights_sum_to_moment():
    ctx = MPMathContext(digits=40)
    _, weights = golub_welsch(jacobi_matrix(QuadratureKind.hermite(), 25, ctx), ctx)
    assert abs(sum(weights) - ctx.sqrt(ctx.pi)) <= ctx.power10(-37)


def test_moments():
    hermite = QuadratureKind.hermite()
    assert monomial_moment(hermite, 0, CTX) == pytest.approx(ROOT_PI, rel=1e-15)
    assert monomial_moment(hermite, 2, CTX) == pytest.approx(ROOT_PI / 2, rel=1e-15)
    assert monomial_moment(hermite, 5, CTX) == 0
    assert monomial_moment(QuadratureKind.laguerre("0"), 3, CTX) == pytest.approx(6.0, rel=1e-14)
    assert monomial_moment(QuadratureKind.laguerre("2"), 1, CTX, normalized=True) == pytest.approx(3.0, rel=1e-14)

    huge = monomial_moment(QuadratureKind.laguerre("0"), 200, CTX)
    assert isinstance(huge, LogMoment)
    assert huge.log_value == pytest.approx(math.lgamma(201), rel=1e-14)
    ctx = MPMathContext(digits=30)
    assert not isinstance(monomial_moment(QuadratureKind.laguerre("0"), 200, ctx), LogMoment)

    with pytest.raises(ValueError):
        monomial_moment(hermite, -1, CTX)


def test_matrix_validation():
    with pytest.raises(ValidationError):
        JacobiMatrix(diagonal=(1.0, 2.0), off_diagonal=(0.0,), moment=1.0)
    with pytest.raises(ValidationError):
        JacobiMatrix(diagonal=(1.0, 2.0), off_diagonal=(), moment=1.0)
    with pytest.raises(ValidationError):
        JacobiMatrix(diagonal=(), off_diagonal=(), moment=1.0)
    with pytest.raises(ValueError):
        jacobi_matrix(QuadratureKind.hermite(), 0, CTX)


def test_polynomials():
    h, dh = hermite_polynomial(3, 0.5, CTX)
    assert h == pytest.approx(-5.0, rel=1e-15)
    assert dh == pytest.approx(-6.0, rel=1e-15)
    l, dl = laguerre_polynomial(2, 1.0, 1.0, CTX)
    assert l == pytest.approx(0.5, rel=1e-15)
    assert dl == pytest.approx(-2.0, rel=1e-15)


if __name__ == "__main__":
    print("=" * 70)
    print("TEST: Reference oracle")
    print("=" * 70)
    for c in (FloatContext(), MPMathContext(digits=30)):
        test_two_point_laguerre_rule(c)
        test_small_hermite_rules(c)
    test_normalized_laguerre_rule()
    test_radau_matrix_has_zero_eigenvalue()
    test_ql_matches_scipy()
    test_moments()
    print("✅ Oracle tests passed")
