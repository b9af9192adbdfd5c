"""Words over the alphabet {0, ..., d-1} and the similarity measure."""

import itertools
import logging
from collections import Counter
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..utils.config import get_config
from ..utils.errors import EnumerationCapError, IncompatibleWordsError, InvalidInputError
from .params import GameParams

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

# numpy index blocks are int64
_INDEX_LIMIT = 2**63 - 1


def sim(z: Sequence[int], x: Sequence[int]) -> int:
    """Number of positions in which z and x agree."""
    if len(z) != len(x):
        raise IncompatibleWordsError(
            f"cannot compare words of length {len(z)} and {len(x)}"
        )
    return sum(1 for a, b in zip(z, x) if a == b)


def validate_word(params: GameParams, x: Sequence[int]) -> Word:
    """Check that x is a word for the game and return it as a tuple."""
    word = tuple(x)
    if len(word) != params.n:
        raise IncompatibleWordsError(
            f"word has length {len(word)}, the game {params} needs {params.n}"
        )
    for letter in word:
        if isinstance(letter, bool) or not isinstance(letter, int):
            raise InvalidInputError(f"letters must be integers, got {letter!r}")
        if not 0 <= letter < params.d:
            raise InvalidInputError(f"letter {letter} outside [0, {params.d - 1}]")
    return word


def majority_encode(x: Sequence[int]) -> int:
    """Most frequent letter of x; the lowest such letter on ties."""
    if not x:
        raise InvalidInputError("cannot encode an empty word")
    counts = Counter(x)
    best = max(counts.values())
    return min(letter for letter, count in counts.items() if count == best)


def check_word_cap(params: GameParams, cap: Optional[int] = None, force: bool = False) -> int:
    """
    Refuse word spaces larger than the cap.

    Args:
        params: Game parameters
        cap: Maximum number of words; the configured cap when omitted
        force: Lift the cap

    Returns:
        The word-space size d^n
    """
    size = params.word_count
    limit = get_config().word_cap if cap is None else cap
    if not force and size > limit:
        raise EnumerationCapError("words", size, limit)
    return size


def iterate_words(
    params: GameParams, cap: Optional[int] = None, force: bool = False
) -> Iterator[Word]:
    """All d^n words in lexicographic order, letter 0 smallest."""
    check_word_cap(params, cap, force)
    return itertools.product(range(params.d), repeat=params.n)


def word_block(params: GameParams, start: int, stop: int) -> np.ndarray:
    """
    Letters of the words with lexicographic indices in [start, stop).

    Returns:
        Array of shape (stop - start, n); row i is the word with index start + i
    """
    if params.word_count > _INDEX_LIMIT:
        raise EnumerationCapError("word indices", params.word_count, _INDEX_LIMIT)
    indices = np.arange(start, stop, dtype=np.int64)
    powers = params.d ** np.arange(params.n - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % params.d


def word_index(params: GameParams, x: Sequence[int]) -> int:
    """Lexicographic index of a word."""
    index = 0
    for letter in validate_word(params, x):
        index = index * params.d + letter
    return index
