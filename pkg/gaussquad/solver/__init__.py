"""Fixed-point iteration for zeros of second order ODEs in normal form."""

from gaussquad.solver.fixed_point import (
    CoefficientModel,
    Evaluator,
    Monotonicity,
    MonotonicInterval,
    StepOrdering,
    StopRule,
    SweepState,
    arctan_branch,
    sweep,
    t_step,
    t_step_negative,
)

__all__ = [
    "CoefficientModel",
    "Evaluator",
    "Monotonicity",
    "MonotonicInterval",
    "StepOrdering",
    "StopRule",
    "SweepState",
    "arctan_branch",
    "sweep",
    "t_step",
    "t_step_negative",
]
