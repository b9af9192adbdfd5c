"""Exact strategy values by word enumeration."""

import logging
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from ..game.encoding import BestResponse, EncodingFunction
from ..game.strategy import DecodingMatrix, RandomizedStrategy
from ..game.words import check_word_cap, sim, word_block
from ..utils.config import get_config
from ..utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def _best_similarities(f: DecodingMatrix, start: int, stop: int) -> np.ndarray:
    """max_y sim(f_y, x) for every word index x in [start, stop)."""
    words = word_block(f.params, start, stop)
    best = np.zeros(stop - start, dtype=np.int64)
    for row in f.to_array():
        np.maximum(best, (words == row).sum(axis=1), out=best)
    return best


def _blocks(start: int, stop: int, batch_size: Optional[int]):
    size = batch_size or get_config().batch_size
    for lo in range(start, stop, size):
        yield lo, min(lo + size, stop)


def strategy_value_range(
    f: DecodingMatrix, start: int, stop: int, batch_size: Optional[int] = None
) -> int:
    """
    Sum of max_y sim(f_y, x) over the words with indices in [start, stop).

    Disjoint ranges add up to the full numerator of the strategy value, so the
    word space can be partitioned freely.
    """
    if not 0 <= start <= stop <= f.params.word_count:
        raise InvalidInputError(
            f"word range [{start}, {stop}) outside [0, {f.params.word_count})"
        )
    total = 0
    for lo, hi in _blocks(start, stop, batch_size):
        total += int(_best_similarities(f, lo, hi).sum())
    return total


def strategy_value(
    f: DecodingMatrix,
    cap: Optional[int] = None,
    force: bool = False,
    batch_size: Optional[int] = None,
) -> Fraction:
    """
    Success probability of f when Alice plays her best response.

    Args:
        f: Decoding matrix
        cap: Word enumeration cap; the configured cap when omitted
        force: Lift the cap
        batch_size: Words per vectorized block

    Returns:
        (1 / (n·d^n)) · Σ_x max_y sim(f_y, x), exact
    """
    size = check_word_cap(f.params, cap, force)
    logger.debug("enumerating %d words for %s", size, f.params)
    total = strategy_value_range(f, 0, size, batch_size)
    return Fraction(total, f.n * size)


def approximation_profile(
    f: DecodingMatrix, cap: Optional[int] = None, force: bool = False
) -> Dict[int, int]:
    """
    Number of words whose best similarity under f is k, for every k in [0, n].

    Returns:
        Mapping k -> word count; counts sum to d^n
    """
    size = check_word_cap(f.params, cap, force)
    counts = np.zeros(f.n + 1, dtype=np.int64)
    for lo, hi in _blocks(0, size, None):
        counts += np.bincount(_best_similarities(f, lo, hi), minlength=f.n + 1)
    return {k: int(c) for k, c in enumerate(counts)}


def pair_value(
    enc: EncodingFunction,
    f: DecodingMatrix,
    cap: Optional[int] = None,
    force: bool = False,
) -> Fraction:
    """
    Success probability of the pair (enc, f).

    Args:
        enc: Alice's encoding
        f: Bob's decoding matrix

    Returns:
        (1 / (n·d^n)) · Σ_x sim(f_{enc(x)}, x), exact
    """
    if isinstance(enc, BestResponse):
        return strategy_value(f, cap, force)
    if enc.params != f.params:
        raise InvalidInputError(f"encoding is for {enc.params}, matrix for {f.params}")
    size = check_word_cap(f.params, cap, force)
    total = sum(sim(f.rows[letter], word) for word, letter in enc.table.items())
    return Fraction(total, f.n * size)


def randomized_value(
    r: RandomizedStrategy, cap: Optional[int] = None, force: bool = False
) -> Fraction:
    """Weighted sum of the component values."""
    return sum(
        (weight * strategy_value(f, cap, force) for weight, f in r.components),
        Fraction(0),
    )
