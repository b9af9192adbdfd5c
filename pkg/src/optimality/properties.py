"""Optimality predicates, regime classification and optimizer counts."""

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List

from ..game.params import GameParams
from ..game.strategy import DecodingMatrix, RandomizedStrategy, apply_column_permutations, majority_strategy


class OptimalityClass(str, Enum):
    """Which characterization of optimal matrices applies to a game."""

    TRIVIAL = "trivial"  # d = 1 or n = 1
    GENERAL = "general"  # n > 2 and (d > 2 or n odd)
    TWO_POSITIONS = "two-positions"  # n = 2, d ≥ 2
    BINARY_EVEN = "binary-even"  # d = 2, even n > 2


class CountBasis(str, Enum):
    THEOREM = "theorem"
    DERIVED = "derived"


@dataclass(frozen=True)
class OptimalCount:
    """Number of optimal decoding matrices and where the number comes from."""

    count: int
    basis: CountBasis
    params: GameParams


def _is_permutation(column, d: int) -> bool:
    return len(set(column)) == d


def non_permutation_columns(g: DecodingMatrix) -> List[int]:
    """Indices of the columns that repeat a letter."""
    return [j for j, column in enumerate(g.columns()) if not _is_permutation(column, g.d)]


def all_columns_permutations(g: DecodingMatrix) -> bool:
    """True iff every column holds each letter exactly once."""
    return not non_permutation_columns(g)


def one_free_column(g: DecodingMatrix) -> bool:
    """True iff at most one column fails to be a permutation."""
    return len(non_permutation_columns(g)) <= 1


def classify(params: GameParams) -> OptimalityClass:
    if params.is_degenerate:
        return OptimalityClass.TRIVIAL
    if params.n == 2:
        return OptimalityClass.TWO_POSITIONS
    if params.d == 2 and params.n % 2 == 0:
        return OptimalityClass.BINARY_EVEN
    return OptimalityClass.GENERAL


def is_optimal(g: DecodingMatrix) -> bool:
    """
    Certify optimality from the structure of g alone.

    Permutation columns are necessary and sufficient in the general and
    trivial regimes; for n = 2 and for binary alphabets with even n, one
    column may be arbitrary.
    """
    regime = classify(g.params)
    if regime in (OptimalityClass.TWO_POSITIONS, OptimalityClass.BINARY_EVEN):
        return one_free_column(g)
    return all_columns_permutations(g)


def is_optimal_randomized(r: RandomizedStrategy) -> bool:
    """A mixture is optimal iff every component with positive weight is."""
    return all(is_optimal(f) for _, f in r.components)


def count_optimal(params: GameParams) -> OptimalCount:
    """
    Number of optimal decoding matrices, Alice playing best response.

    The general regime has exactly (d!)^n. For n = 2 and for binary even n the
    optimal matrices are those with one free column,
    (d!)^n + n·(d^d − d!)·(d!)^(n−1). Trivial games count (d!)^n as well.
    """
    n, d = params.n, params.d
    perms = math.factorial(d)
    regime = classify(params)
    if regime is OptimalityClass.GENERAL:
        return OptimalCount(perms**n, CountBasis.THEOREM, params)
    if regime is OptimalityClass.TRIVIAL:
        return OptimalCount(perms**n, CountBasis.DERIVED, params)
    free = perms**n + n * (d**d - perms) * perms ** (n - 1)
    return OptimalCount(free, CountBasis.DERIVED, params)


def permutation_orbit(params: GameParams) -> Iterator[DecodingMatrix]:
    """All (d!)^n matrices obtained by relabelling the columns of the majority strategy."""
    g = majority_strategy(params)
    letters = range(params.d)
    for perms in itertools.product(itertools.permutations(letters), repeat=params.n):
        yield apply_column_permutations(g, perms)
