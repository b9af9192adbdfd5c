"""Exact values of strategies and games."""

from .closed_forms import binary_even_value, two_position_value
from .evaluator import (
    approximation_profile,
    pair_value,
    randomized_value,
    strategy_value,
    strategy_value_range,
)
from .multiplicity import (
    cumulative_at_most,
    max_multiplicity_counts,
    optimal_value,
    optimal_value_table,
)
from .report import ValueMethod, ValueReport, evaluate, optimal_value_report

__all__ = [
    "binary_even_value",
    "two_position_value",
    "approximation_profile",
    "pair_value",
    "randomized_value",
    "strategy_value",
    "strategy_value_range",
    "cumulative_at_most",
    "max_multiplicity_counts",
    "optimal_value",
    "optimal_value_table",
    "ValueMethod",
    "ValueReport",
    "evaluate",
    "optimal_value_report",
]
