"""
Iteration budget table.

Runs Gauss-Hermite (or Gauss-Laguerre) over a grid of degrees and working
precisions and prints the mean number of fixed-point iterations and Taylor
terms per node. Every run is appended to the JSON run log.
"""

import sys
import time
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from gaussquad.core.scalar import get_context
from gaussquad.core.schemas import QuadratureRule
from gaussquad.rules.hermite import gauss_hermite
from gaussquad.rules.laguerre import gauss_laguerre
from gaussquad.utils.logging import RuleRunLogger, configure_logging_from_env, get_logger

logger = get_logger(__name__)

DEFAULT_DEGREES = [100, 1000, 10000]
DEFAULT_DIGITS = [16, 32, 64, 128]

# (mean iterations, mean terms, seconds), or the error text of a failed run
Cell = Union[Tuple[float, float, float], str]


def build(family: str, n: int, digits: int, alpha: str) -> Tuple[QuadratureRule, float]:
    ctx = get_context(digits)
    started = time.perf_counter()
    if family == "hermite":
        rule = gauss_hermite(n, ctx=ctx)
    else:
        rule = gauss_laguerre(n, alpha, ctx=ctx)
    return rule, time.perf_counter() - started


def iteration_table(
    family: str,
    degrees: List[int],
    digit_levels: List[int],
    alpha: str = "0",
    log_dir: str = "logs",
    run_logger: Optional[RuleRunLogger] = None
) -> Dict[Tuple[int, int], Cell]:
    """
    Mean iterations, mean terms and seconds for every (n, D) pair.

    A run that raises keeps its cell, holding the error message instead.
    """
    run_logger = run_logger or RuleRunLogger(log_file="iteration_table.log", log_dir=log_dir)
    table: Dict[Tuple[int, int], Cell] = {}
    for digits in digit_levels:
        for n in degrees:
            try:
                rule, elapsed = build(family, n, digits, alpha)
            except Exception as e:
                logger.error(f"{family} n={n} D={digits} failed: {e}", exc_info=True)
                table[(n, digits)] = f"{type(e).__name__}: {' '.join(str(e).split())}"
                continue
            table[(n, digits)] = (rule.stats.mean_iterations, rule.stats.mean_terms, elapsed)
            run_logger.log_rule(rule, elapsed, metadata={"script": "iteration_table"})
    return table


def failed_cells(table: Dict[Tuple[int, int], Cell]) -> List[Tuple[int, int]]:
    return [key for key, cell in table.items() if isinstance(cell, str)]


def print_table(family: str, table: Dict[Tuple[int, int], Cell],
                degrees: List[int], digit_levels: List[int]) -> None:
    print("=" * 70)
    print(f"Average iterations / Taylor terms per node: {family}")
    print("=" * 70)
    header = f"{'n':>8}" + "".join(f"{'D=' + str(d):>20}" for d in digit_levels)
    print(header)
    for n in degrees:
        cells = []
        for d in digit_levels:
            cell = table.get((n, d))
            if cell is None:
                cells.append(f"{'-':>18}")
            elif isinstance(cell, str):
                cells.append(f"{'failed':>18}")
            else:
                iterations, terms, _ = cell
                cells.append(f"{iterations:9.3f} /{terms:8.1f}")
        print(f"{n:>8}" + "".join(f"{c:>20}" for c in cells))
    failures = failed_cells(table)
    if failures:
        print("\nFailed runs:")
        for n, d in failures:
            print(f"  n={n} D={d}: {table[(n, d)]}")
    total = sum(cell[2] for cell in table.values() if not isinstance(cell, str))
    print(f"\nTotal time: {total:.1f}s")


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(
        description="Tabulate iterations and Taylor terms per node",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python scripts/iteration_table.py
  python scripts/iteration_table.py --degrees 100 1000 --digits 16 32
  python scripts/iteration_table.py --family laguerre --alpha 0.5
        """
    )
    parser.add_argument("--family", choices=["hermite", "laguerre"], default="hermite")
    parser.add_argument("--alpha", default="0", help="Laguerre parameter")
    parser.add_argument("--degrees", type=int, nargs="+", default=DEFAULT_DEGREES)
    parser.add_argument("--digits", type=int, nargs="+", default=DEFAULT_DIGITS)
    parser.add_argument("--log-dir", default="logs", help="Directory for the JSON run log")
    args = parser.parse_args()

    configure_logging_from_env()
    result = iteration_table(args.family, args.degrees, args.digits, args.alpha, args.log_dir)
    print_table(args.family, result, args.degrees, args.digits)
    sys.exit(1 if failed_cells(result) else 0)
