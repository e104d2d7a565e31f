"""
Acceptance report for the quadrature rules.
Builds the headline rules, checks them against reference values and prints
a summary. Each rule built is appended to the JSON run log under
logs/run_all_tests.

    python tests/run_tests.py
"""

import math
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import numpy as np

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from gaussquad.core.scalar import FloatContext, MPMathContext
from gaussquad.core.schemas import QuadratureKind, QuadratureRule
from gaussquad.oracle.golub_welsch import golub_welsch, jacobi_matrix, monomial_moment
from gaussquad.rules.barycentric import barycentric_weights
from gaussquad.rules.hermite import gauss_hermite
from gaussquad.rules.laguerre import gauss_laguerre, laguerre_bounds, radau_laguerre
from gaussquad.utils.logging import RuleRunLogger, configure_logging_from_env


# ============================================================================
# TEST CONFIGURATION
# ============================================================================

TEST_LOG_FOLDER = Path(__file__).parent.parent / "logs" / "run_all_tests"
LAGUERRE_ALPHAS = ["-0.9", "-0.5", "0", "2.5", "100", "1000"]


# ============================================================================
# TEST UTILITIES
# ============================================================================

def print_test_header(title: str):
    print("\n" + "=" * 80)
    print(f"  {title}")
    print("=" * 80)


def timed(run_logger: RuleRunLogger, build: Callable[[], QuadratureRule], label: str) -> QuadratureRule:
    started = time.perf_counter()
    rule = build()
    elapsed = time.perf_counter() - started
    run_logger.log_rule(rule, elapsed, metadata={"check": label})
    print(f"   built {label} in {elapsed:.2f}s "
          f"({rule.stats.mean_iterations:.2f} iterations, {rule.stats.mean_terms:.1f} terms per node)")
    return rule


def relative_error(values, exact) -> float:
    values = np.asarray([float(v) for v in values])
    exact = np.asarray([float(v) for v in exact])
    mask = exact != 0
    return float(np.max(np.abs(values[mask] - exact[mask]) / np.abs(exact[mask])))


# ============================================================================
# CHECKS
# ============================================================================

def check_hermite(run_logger: RuleRunLogger) -> bool:
    print_test_header("TEST 1: GAUSS-HERMITE ACCURACY AND BUDGET")
    ok = True
    budgets = {100: 2.5, 1000: 2.0}
    for n in (10, 100, 1000, 5000):
        rule = timed(run_logger, lambda: gauss_hermite(n), f"hermite n={n}")
        reference = gauss_hermite(n, ctx=MPMathContext(digits=32))
        node_error = relative_error(rule.nodes, reference.nodes)
        weights = np.array([float(w) for w in reference.weights])
        mask = weights > 1e-30
        scaled_error = relative_error(np.array(rule.scaled_weights)[mask],
                                      np.array([float(w) for w in reference.scaled_weights])[mask])
        budget = budgets.get(n, math.inf)
        passed = node_error <= 2e-16 and scaled_error <= 1e-13 and rule.stats.mean_iterations <= budget
        ok &= passed
        print(f"   n={n}: node error {node_error:.2e}, scaled weight error {scaled_error:.2e}, "
              f"mean iterations {rule.stats.mean_iterations:.3f} (<= {budget}) {'✓' if passed else '✗'}")
    return ok


def check_laguerre(run_logger: RuleRunLogger) -> bool:
    print_test_header("TEST 2: GAUSS-LAGUERRE NORMALIZATION, BOUNDS AND ORACLE")
    ok = True
    ctx = FloatContext()
    for alpha in LAGUERRE_ALPHAS:
        for n in (5, 50, 500):
            rule = timed(run_logger, lambda: gauss_laguerre(n, alpha), f"laguerre n={n} alpha={alpha}")
            total = math.fsum(rule.weights)
            bounds = laguerre_bounds(ctx, n, float(alpha))
            inside = bounds.lower < rule.nodes[0] and rule.nodes[-1] < bounds.upper
            passed = abs(total - 1) <= 1e-14 and inside
            line = f"   n={n:>3} alpha={alpha:>5}: |sum - 1| = {abs(total - 1):.1e}, bounds {'ok' if inside else 'violated'}"
            if n <= 50:
                mp = MPMathContext(digits=30)
                nodes, weights = golub_welsch(
                    jacobi_matrix(QuadratureKind.laguerre(alpha), n, mp, normalized=True), mp)
                keep = [i for i, w in enumerate(weights) if w > 1e-30]
                error = relative_error([rule.nodes[i] for i in keep], [nodes[i] for i in keep])
                passed &= error <= 1e-12
                line += f", node error vs oracle {error:.1e}"
            ok &= passed
            print(line + (" ✓" if passed else " ✗"))
    return ok


def check_exactness(run_logger: RuleRunLogger) -> bool:
    print_test_header("TEST 3: MONOMIAL EXACTNESS (LAGUERRE AND RADAU)")
    ok = True
    ctx = FloatContext()
    for n in (5, 10, 20):
        rule = timed(run_logger, lambda: gauss_laguerre(n, "0"), f"laguerre n={n}")
        radau = timed(run_logger, lambda: radau_laguerre(n, "0"), f"radau n={n}")
        kind = QuadratureKind.laguerre("0")
        worst = 0.0
        for k in range(2 * n):
            exact = float(monomial_moment(kind, k, ctx, normalized=True))
            worst = max(worst, abs(rule.integrate(lambda x: x ** k) - exact) / exact)
        radau_worst = 0.0
        for k in range(2 * n + 1):
            exact = float(monomial_moment(kind, k, ctx, normalized=True))
            radau_worst = max(radau_worst, abs(radau.integrate(lambda x: x ** k) - exact) / exact)
        passed = worst <= 1e-12 and radau_worst <= 1e-12
        ok &= passed
        print(f"   n={n}: Gauss {worst:.1e}, Radau {radau_worst:.1e} {'✓' if passed else '✗'}")
    return ok


def check_barycentric(run_logger: RuleRunLogger) -> bool:
    print_test_header("TEST 4: BARYCENTRIC WEIGHTS")
    rule = timed(run_logger, lambda: gauss_laguerre(15, "0.5"), "laguerre n=15 alpha=0.5")
    computed = np.array(barycentric_weights(rule))
    direct = np.array([1.0 / np.prod([xi - xj for j, xj in enumerate(rule.nodes) if j != i])
                       for i, xi in enumerate(rule.nodes)])
    direct /= np.max(np.abs(direct))
    sign = 1.0 if computed[0] * direct[0] > 0 else -1.0
    error = float(np.max(np.abs(sign * computed - direct) / np.abs(direct)))
    passed = error <= 1e-10
    print(f"   max relative difference to 1/prod(x_i - x_j): {error:.1e} {'✓' if passed else '✗'}")
    return passed


# ============================================================================
# MAIN TEST RUNNER
# ============================================================================

def run_all_tests() -> bool:
    print("\n")
    print("╔" + "=" * 78 + "╗")
    print("║" + "QUADRATURE ACCEPTANCE REPORT".center(78) + "║")
    print("╚" + "=" * 78 + "╝")

    TEST_LOG_FOLDER.mkdir(parents=True, exist_ok=True)
    log_file = TEST_LOG_FOLDER / "acceptance_runs.log"
    log_file.write_text("")
    run_logger = RuleRunLogger(log_file=log_file.name, log_dir=str(TEST_LOG_FOLDER))

    checks: List[Tuple[str, Callable[[RuleRunLogger], bool]]] = [
        ("Gauss-Hermite", check_hermite),
        ("Gauss-Laguerre", check_laguerre),
        ("Monomial exactness", check_exactness),
        ("Barycentric weights", check_barycentric),
    ]
    results: Dict[str, bool] = {}
    for name, check in checks:
        try:
            results[name] = check(run_logger)
        except Exception as e:
            print(f"\n❌ {name} crashed: {e}")
            results[name] = False

    print_test_header("TEST SUMMARY")
    for i, (name, passed) in enumerate(results.items(), 1):
        print(f"  {i}. {name + ':':<24} {'✅ PASSED' if passed else '❌ FAILED'}")
    passed = sum(results.values())
    print(f"\n  Overall: {passed}/{len(results)} checks passed")
    print(f"\n📋 Run log: {log_file}")
    return passed == len(results)


if __name__ == "__main__":
    configure_logging_from_env()
    sys.exit(0 if run_all_tests() else 1)
