"""Optimality certification, counting and the exhaustive oracle."""

from .properties import (
    CountBasis,
    OptimalCount,
    OptimalityClass,
    all_columns_permutations,
    classify,
    count_optimal,
    is_optimal,
    is_optimal_randomized,
    non_permutation_columns,
    one_free_column,
    permutation_orbit,
)
from .oracle import OracleResult, matrix_from_index, matrix_index, oracle_enumerate
from .certificate import Certification, certify

__all__ = [
    "CountBasis",
    "OptimalCount",
    "OptimalityClass",
    "all_columns_permutations",
    "classify",
    "count_optimal",
    "is_optimal",
    "is_optimal_randomized",
    "non_permutation_columns",
    "one_free_column",
    "permutation_orbit",
    "OracleResult",
    "matrix_from_index",
    "matrix_index",
    "oracle_enumerate",
    "Certification",
    "certify",
]
