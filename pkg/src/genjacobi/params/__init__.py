"""Weight parameters and pointwise evaluation."""

from .weight import (
    AnalyticFactor,
    FactorKind,
    WeightParams,
    eval_weight,
    validate,
    with_factor,
)

__all__ = [
    "AnalyticFactor",
    "FactorKind",
    "WeightParams",
    "eval_weight",
    "validate",
    "with_factor",
]
