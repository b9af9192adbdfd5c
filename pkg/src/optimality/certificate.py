"""Certification reports for a single strategy."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..game.params import GameParams
from ..game.strategy import DecodingMatrix, RandomizedStrategy
from ..utils.config import get_config
from ..value.evaluator import randomized_value, strategy_value
from ..value.report import optimal_value_report
from .properties import (
    OptimalityClass,
    all_columns_permutations,
    classify,
    is_optimal,
    is_optimal_randomized,
    one_free_column,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certification:
    """Structural verdict on a strategy, plus its exact gap when computable."""

    params: GameParams
    regime: OptimalityClass
    permutation_columns: Optional[bool]
    one_free_column: Optional[bool]
    optimal: bool
    optimal_value: Fraction
    value: Optional[Fraction]

    @property
    def gap(self) -> Optional[Fraction]:
        if self.value is None:
            return None
        return self.optimal_value - self.value


def certify(
    strategy: Union[DecodingMatrix, RandomizedStrategy],
    cap: Optional[int] = None,
    force: bool = False,
) -> Certification:
    """
    Classify a strategy and, when d^n fits the cap, measure its gap to optimal.

    Args:
        strategy: Decoding matrix or randomized strategy
        cap: Word enumeration cap
        force: Lift the cap

    Returns:
        Certification
    """
    params = strategy.params
    limit = get_config().word_cap if cap is None else cap
    computable = force or params.word_count <= limit

    if isinstance(strategy, RandomizedStrategy):
        permutation, free = None, None
        optimal = is_optimal_randomized(strategy)
        value = randomized_value(strategy, limit, force) if computable else None
    else:
        permutation = all_columns_permutations(strategy)
        free = one_free_column(strategy)
        optimal = is_optimal(strategy)
        value = strategy_value(strategy, limit, force) if computable else None

    if not computable:
        logger.info("word space of %s exceeds the cap; gap not computed", params)
    return Certification(
        params=params,
        regime=classify(params),
        permutation_columns=permutation,
        one_free_column=free,
        optimal=optimal,
        optimal_value=optimal_value_report(params).value,
        value=value,
    )
