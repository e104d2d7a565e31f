"""Command-line front end: compute a rule and print it as CSV or JSON."""

import argparse
import json
import sys
import time
from decimal import Decimal
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from gaussquad.core.scalar import ScalarContext, get_context
from gaussquad.core.schemas import QuadratureKind, QuadratureRule, RuleFamily
from gaussquad.rules.barycentric import barycentric_weights
from gaussquad.rules.hermite import gauss_hermite
from gaussquad.rules.laguerre import gauss_laguerre, radau_laguerre
from gaussquad.utils.logging import RuleRunLogger, configure_logging_from_env, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class CliRequest(BaseModel):
    """One validated invocation."""
    family: RuleFamily
    n: int = Field(ge=1, description="Degree")
    alpha: Optional[Decimal] = Field(default=None, description="Laguerre parameter; 0 when omitted")
    digits: int = Field(default=16, ge=8, description="Working decimal digits D")
    format: OutputFormat = OutputFormat.CSV
    threshold: Decimal = Field(default=Decimal(0), ge=0, description="Drop rows whose weight is below this")
    normalized: bool = Field(default=False, description="Laguerre weights normalized to sum to one")
    barycentric: bool = False
    stats: bool = False
    run_log: Optional[str] = Field(default=None, description="Directory for the JSON run log")

    @field_validator("alpha", "threshold", mode="before")
    @classmethod
    def _decimal(cls, value: Any) -> Any:
        if isinstance(value, float):
            return Decimal(repr(value))
        return value

    @model_validator(mode="after")
    def _check_family(self) -> "CliRequest":
        if self.family == RuleFamily.HERMITE:
            if self.alpha is not None:
                raise ValueError("--alpha applies to Laguerre families only")
        elif self.alpha is None:
            self.alpha = Decimal(0)
        if self.family != RuleFamily.HERMITE and not self.alpha > -1:
            raise ValueError(f"alpha must be > -1, got {self.alpha}")
        return self

    def kind(self) -> QuadratureKind:
        return QuadratureKind(family=self.family, alpha=self.alpha)


class CliUsageError(Exception):
    """Raised instead of argparse's own exit so main() owns the exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliUsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gaussquad",
        description="Gauss-Hermite, Gauss-Laguerre and Radau-Laguerre rules by fixed-point iteration.",
    )
    parser.add_argument("family", choices=[f.value for f in RuleFamily], help="Weight function family")
    parser.add_argument("--n", type=int, required=True, help="Number of nodes")
    parser.add_argument("--alpha", default=None, help="Laguerre parameter (> -1), decimal string")
    parser.add_argument("--digits", type=int, default=16, help="Working decimal digits (>= 8)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    parser.add_argument("--threshold", default="0", help="Omit nodes whose weight is below this value")
    parser.add_argument("--normalized", action="store_true", help="Laguerre weights summing to one")
    parser.add_argument("--barycentric", action="store_true", help="Add barycentric interpolation weights")
    parser.add_argument("--stats", action="store_true", help="Append mean iterations and terms per node")
    parser.add_argument("--run-log", default=None, metavar="DIR", help="Append a JSON run record in DIR")
    parser.add_argument("--log-level", default=None, help="Logging level for stderr diagnostics")
    return parser


def parse_request(argv: Optional[Sequence[str]] = None) -> Tuple[CliRequest, Optional[str]]:
    args = build_parser().parse_args(argv)
    request = CliRequest(
        family=args.family,
        n=args.n,
        alpha=args.alpha,
        digits=args.digits,
        format=args.format,
        threshold=args.threshold,
        normalized=args.normalized,
        barycentric=args.barycentric,
        stats=args.stats,
        run_log=args.run_log,
    )
    return request, args.log_level


def build_rule(request: CliRequest) -> Tuple[QuadratureRule, float]:
    ctx = get_context(request.digits)
    started = time.perf_counter()
    if request.family == RuleFamily.HERMITE:
        rule = gauss_hermite(request.n, ctx=ctx)
    elif request.family == RuleFamily.LAGUERRE:
        rule = gauss_laguerre(request.n, request.alpha, ctx=ctx)
    else:
        rule = radau_laguerre(request.n, request.alpha, ctx=ctx)
    return rule, time.perf_counter() - started


def _rows(request: CliRequest, rule: QuadratureRule, ctx: ScalarContext) -> List[Dict[str, Any]]:
    """Ascending rows (boundary node first for Radau) before threshold filtering."""
    weights = rule.weights
    scale = ctx.one
    if rule.kind.family != RuleFamily.HERMITE and not request.normalized:
        if rule.weight_scale is None:
            logger.warning("Gamma(alpha+1) overflows; emitting normalized weights")
        else:
            scale = rule.weight_scale
    rows: List[Dict[str, Any]] = []
    if rule.boundary_weight is not None:
        rows.append({"i": 0, "x": ctx.zero, "w": rule.boundary_weight * scale, "omega": None})
    for i, (x, w, omega) in enumerate(zip(rule.nodes, weights, rule.scaled_weights), start=1):
        rows.append({"i": i, "x": x, "w": w * scale, "omega": omega})
    if request.barycentric:
        for row, v in zip(rows, barycentric_weights(rule)):
            row["v"] = v
    return rows


def render(request: CliRequest, rule: QuadratureRule) -> str:
    """Format a rule for output; every number carries D significant digits."""
    ctx = rule.context()
    digits = request.digits
    threshold = ctx.convert(request.threshold)

    def fmt(value: Any) -> str:
        return "" if value is None else ctx.format(value, digits)

    rows = [r for r in _rows(request, rule, ctx) if not r["w"] < threshold]
    columns = ["i", "x", "w", "omega"] + (["v"] if request.barycentric else [])
    logger.debug(f"{len(rows)} of {rule.n} rows pass threshold {request.threshold}")

    if request.format == OutputFormat.JSON:
        payload: Dict[str, Any] = {"kind": rule.kind.family.value, "n": rule.n}
        if rule.kind.alpha is not None:
            payload["alpha"] = str(rule.kind.alpha)
        payload["digits"] = digits
        payload["normalized"] = request.normalized or rule.kind.family == RuleFamily.HERMITE
        payload["indices"] = [r["i"] for r in rows]
        payload["nodes"] = [fmt(r["x"]) for r in rows]
        payload["weights"] = [fmt(r["w"]) for r in rows]
        payload["scaled_weights"] = [fmt(r["omega"]) for r in rows]
        if request.barycentric:
            payload["barycentric_weights"] = [fmt(r["v"]) for r in rows]
        if request.stats:
            payload["stats"] = rule.stats.summary()
        return json.dumps(payload, indent=2)

    lines = [",".join(columns)]
    for r in rows:
        lines.append(",".join(str(r["i"]) if c == "i" else fmt(r[c]) for c in columns))
    if request.stats:
        lines.append(f"# nodes_computed={rule.stats.node_count}")
        lines.append(f"# mean_iterations={rule.stats.mean_iterations:.4f}")
        lines.append(f"# mean_terms={rule.stats.mean_terms:.4f}")
    return "\n".join(lines)


def run(request: CliRequest, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """
    Compute, print and optionally log one rule; returns the exit code.

    The request is already validated, so anything raised here is internal.
    """
    try:
        rule, elapsed = build_rule(request)
        text = render(request, rule)
    except Exception as e:
        logger.error(f"Rule computation failed: {e}", exc_info=True)
        print(f"internal error: {_one_line(e)}", file=err)
        return EXIT_INTERNAL

    out.write(text + "\n")
    logger.info(f"{request.family.value} n={request.n} emitted in {elapsed:.3f}s")
    if request.run_log:
        RuleRunLogger(log_dir=request.run_log).log_rule(rule, elapsed, metadata=request.model_dump(mode="json"))
    return EXIT_OK


def _one_line(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(str(item["msg"]) for item in error.errors())
    return " ".join(str(error).split())


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        request, log_level = parse_request(argv)
    except (CliUsageError, ValidationError, ValueError) as e:
        print(f"error: {_one_line(e)}", file=err)
        return EXIT_USAGE
    configure_logging_from_env(log_level)
    return run(request, out=out, err=err)


if __name__ == "__main__":
    sys.exit(main())
