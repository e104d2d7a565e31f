"""Pydantic schemas for quadrature kinds, rules and iteration statistics."""

import json
from decimal import Decimal, InvalidOperation
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gaussquad.core.scalar import ScalarContext, context_for


class RuleFamily(str, Enum):
    """Supported weight functions."""
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    RADAU_LAGUERRE = "radau-laguerre"


class QuadratureKind(BaseModel):
    """Rule family plus its parameter α (Laguerre families only)."""
    model_config = ConfigDict(frozen=True)

    family: RuleFamily = Field(description="Weight function family")
    alpha: Optional[Decimal] = Field(default=None, description="Laguerre parameter, exact decimal")

    @field_validator("alpha", mode="before")
    @classmethod
    def _exact_decimal(cls, value: Any) -> Any:
        if value is None or isinstance(value, Decimal):
            return value
        try:
            if isinstance(value, float):
                return Decimal(repr(value))
            return Decimal(str(value))
        except InvalidOperation as e:
            raise ValueError(f"alpha is not a number: {value!r}") from e

    @model_validator(mode="after")
    def _check_alpha(self) -> "QuadratureKind":
        if self.family == RuleFamily.HERMITE:
            if self.alpha is not None:
                raise ValueError("Hermite rules take no alpha")
        else:
            if self.alpha is None:
                raise ValueError(f"{self.family.value} rules need alpha")
            if not self.alpha.is_finite() or self.alpha <= -1:
                raise ValueError(f"alpha must be a finite number > -1, got {self.alpha}")
        return self

    @classmethod
    def hermite(cls) -> "QuadratureKind":
        return cls(family=RuleFamily.HERMITE)

    @classmethod
    def laguerre(cls, alpha: Any) -> "QuadratureKind":
        return cls(family=RuleFamily.LAGUERRE, alpha=alpha)

    @classmethod
    def radau_laguerre(cls, alpha: Any) -> "QuadratureKind":
        return cls(family=RuleFamily.RADAU_LAGUERRE, alpha=alpha)


class IterationStats(BaseModel):
    """Per-node iteration counts and Taylor/CF terms spent."""
    iterations: List[int] = Field(default_factory=list, description="Iterations per node")
    terms: List[int] = Field(default_factory=list, description="Evaluation terms per node")

    def record(self, iterations: int, terms: int) -> None:
        if iterations < 1:
            raise ValueError(f"every node needs at least one iteration, got {iterations}")
        self.iterations.append(iterations)
        self.terms.append(terms)

    def extend(self, other: "IterationStats") -> None:
        self.iterations.extend(other.iterations)
        self.terms.extend(other.terms)

    @property
    def node_count(self) -> int:
        return len(self.iterations)

    @property
    def mean_iterations(self) -> float:
        return sum(self.iterations) / len(self.iterations) if self.iterations else 0.0

    @property
    def mean_terms(self) -> float:
        return sum(self.terms) / len(self.terms) if self.terms else 0.0

    def summary(self) -> Dict[str, Any]:
        return {
            "mean_iterations": self.mean_iterations,
            "mean_terms": self.mean_terms,
            "iterations": list(self.iterations),
            "terms": list(self.terms),
        }


class QuadratureRule(BaseModel):
    """
    A finished rule.

    Hermite weights are unscaled (they sum to √π); Laguerre and Radau weights
    are normalized to one, with `weight_scale` = Γ(α+1) when representable.
    Scaled weights drop the elementary factor of the weight function (for
    Laguerre relative to `reference_node`). `derivatives` holds y' at each
    node in the canonical variable, all sharing one normalization.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: QuadratureKind
    n: int = Field(ge=1, description="Degree")
    backend: str = Field(description="Scalar backend name")
    precision_bits: int = Field(ge=2, description="Binary precision of the values")
    digits: int = Field(ge=1, description="Working decimal digits")
    nodes: Tuple[Any, ...]
    weights: Tuple[Any, ...]
    scaled_weights: Tuple[Any, ...]
    derivatives: Tuple[Any, ...] = ()
    boundary_weight: Optional[Any] = None
    weight_scale: Optional[Any] = None
    reference_node: Optional[Any] = None
    stats: IterationStats = Field(default_factory=IterationStats)

    @model_validator(mode="after")
    def _check_shape(self) -> "QuadratureRule":
        if len(self.nodes) != self.n:
            raise ValueError(f"rule of degree {self.n} carries {len(self.nodes)} nodes")
        if len(self.weights) != self.n or len(self.scaled_weights) != self.n:
            raise ValueError("weights and scaled weights must match the node count")
        if self.derivatives and len(self.derivatives) != self.n:
            raise ValueError("derivatives must match the node count")
        for left, right in zip(self.nodes, self.nodes[1:]):
            if not left < right:
                raise ValueError("nodes must be strictly increasing")
        if self.kind.family != RuleFamily.HERMITE and self.nodes and not self.nodes[0] > 0:
            raise ValueError("Laguerre nodes must be positive")
        if (self.boundary_weight is None) != (self.kind.family != RuleFamily.RADAU_LAGUERRE):
            raise ValueError("boundary_weight is present exactly for Radau rules")
        return self

    @property
    def alpha(self) -> Optional[Decimal]:
        return self.kind.alpha

    def context(self) -> ScalarContext:
        return context_for(self.backend, self.precision_bits, self.digits)

    def unnormalized_weights(self) -> Optional[Tuple[Any, ...]]:
        """Weights for the raw weight function, or None if Γ(α+1) overflows."""
        if self.kind.family == RuleFamily.HERMITE:
            return self.weights
        if self.weight_scale is None:
            return None
        return tuple(w * self.weight_scale for w in self.weights)

    def integrate(self, f: Callable[[Any], Any]) -> Any:
        """Apply the rule (in its stored normalization) to f."""
        total = sum((w * f(x) for x, w in zip(self.nodes, self.weights)), self.context().zero)
        if self.boundary_weight is not None:
            total += self.boundary_weight * f(self.context().zero)
        return total

    def to_payload(self) -> Dict[str, Any]:
        ctx = self.context()
        exact = ctx.to_exact_string

        def optional(value: Any) -> Optional[str]:
            return None if value is None else exact(value)

        payload: Dict[str, Any] = {"kind": self.kind.family.value, "n": self.n}
        if self.kind.alpha is not None:
            payload["alpha"] = str(self.kind.alpha)
        payload.update({
            "nodes": [exact(x) for x in self.nodes],
            "weights": [exact(w) for w in self.weights],
            "scaled_weights": [exact(w) for w in self.scaled_weights],
        })
        if self.boundary_weight is not None:
            payload["boundary_weight"] = exact(self.boundary_weight)
        payload.update({
            "stats": self.stats.summary(),
            "backend": self.backend,
            "precision_bits": self.precision_bits,
            "digits": self.digits,
            "derivatives": [exact(d) for d in self.derivatives],
            "weight_scale": optional(self.weight_scale),
            "reference_node": optional(self.reference_node),
        })
        return payload

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_payload(), indent=indent)

    @classmethod
    def from_payload(cls, payload: Dict[str, Any]) -> "QuadratureRule":
        ctx = context_for(payload["backend"], payload["precision_bits"], payload["digits"])

        def values(key: str) -> Tuple[Any, ...]:
            return tuple(ctx.convert(s) for s in payload.get(key) or [])

        def optional(key: str) -> Optional[Any]:
            raw = payload.get(key)
            return None if raw is None else ctx.convert(raw)

        stats = payload.get("stats") or {}
        return cls(
            kind=QuadratureKind(family=payload["kind"], alpha=payload.get("alpha")),
            n=payload["n"],
            backend=payload["backend"],
            precision_bits=payload["precision_bits"],
            digits=payload["digits"],
            nodes=values("nodes"),
            weights=values("weights"),
            scaled_weights=values("scaled_weights"),
            derivatives=values("derivatives"),
            boundary_weight=optional("boundary_weight"),
            weight_scale=optional("weight_scale"),
            reference_node=optional("reference_node"),
            stats=IterationStats(
                iterations=stats.get("iterations", []),
                terms=stats.get("terms", []),
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "QuadratureRule":
        return cls.from_payload(json.loads(text))
