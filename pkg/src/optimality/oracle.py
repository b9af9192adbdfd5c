"""Exhaustive scan of every decoding matrix of a small game."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..game.params import GameParams
from ..game.strategy import DecodingMatrix
from ..game.words import word_block
from ..utils.config import get_config
from ..utils.errors import EnumerationCapError, InvalidInputError

logger = logging.getLogger(__name__)

# elements of the (matrices, rows, words) block gathered at once
_BLOCK_ELEMENTS = 1 << 22

# matrix indices are int64
_INDEX_LIMIT = 2**63 - 1


@dataclass(frozen=True)
class OracleResult:
    """
    Exact maximum over a range of matrices and how many matrices attain it.

    optimizer_indices lists the attaining matrices by index while their number
    stays within `limit`, and is None beyond it.
    """

    params: GameParams
    max_value: Optional[Fraction]
    optimizer_count: int
    optimizer_indices: Optional[Tuple[int, ...]]
    scanned: int
    limit: int

    @property
    def optimizers(self) -> Optional[Tuple[DecodingMatrix, ...]]:
        if self.optimizer_indices is None:
            return None
        return tuple(matrix_from_index(self.params, t) for t in self.optimizer_indices)

    def merge(self, other: "OracleResult") -> "OracleResult":
        """Combine the results of two disjoint scans."""
        if other.params != self.params:
            raise InvalidInputError(f"cannot merge scans of {self.params} and {other.params}")
        limit = min(self.limit, other.limit)
        scanned = self.scanned + other.scanned
        if other.max_value is None or (
            self.max_value is not None and self.max_value > other.max_value
        ):
            best, count, indices = self.max_value, self.optimizer_count, self.optimizer_indices
        elif self.max_value is None or other.max_value > self.max_value:
            best, count, indices = other.max_value, other.optimizer_count, other.optimizer_indices
        else:
            best = self.max_value
            count = self.optimizer_count + other.optimizer_count
            indices = None
            if (
                count <= limit
                and self.optimizer_indices is not None
                and other.optimizer_indices is not None
            ):
                indices = tuple(sorted(self.optimizer_indices + other.optimizer_indices))
        if indices is not None and len(indices) > limit:
            indices = None
        return OracleResult(self.params, best, count, indices, scanned, limit)


def matrix_from_index(params: GameParams, t: int) -> DecodingMatrix:
    """Matrix number t in row-major lexicographic order."""
    if not 0 <= t < params.matrix_count:
        raise InvalidInputError(f"matrix index {t} outside [0, {params.matrix_count})")
    entries: List[int] = []
    for _ in range(params.d * params.n):
        t, letter = divmod(t, params.d)
        entries.append(letter)
    entries.reverse()
    n = params.n
    return DecodingMatrix(
        params, tuple(tuple(entries[y * n : (y + 1) * n]) for y in range(params.d))
    )


def matrix_index(f: DecodingMatrix) -> int:
    """Position of f in row-major lexicographic order."""
    t = 0
    for row in f.rows:
        for letter in row:
            t = t * f.d + letter
    return t


def _similarity_table(params: GameParams) -> np.ndarray:
    """S[r, x] = sim(word r, word x) over all pairs of words."""
    words = word_block(params, 0, params.word_count)
    table = np.empty((params.word_count, params.word_count), dtype=np.int64)
    for r, word in enumerate(words):
        table[r] = (words == word).sum(axis=1)
    return table


def oracle_enumerate(
    params: GameParams,
    cap: Optional[int] = None,
    force: bool = False,
    limit: Optional[int] = None,
    start: int = 0,
    stop: Optional[int] = None,
) -> OracleResult:
    """
    Value every decoding matrix with index in [start, stop).

    Args:
        params: Game parameters
        cap: Maximum matrix-space size; the configured oracle cap when omitted
        force: Lift the cap
        limit: Keep the optimizers when there are at most this many
        start: First matrix index
        stop: One past the last matrix index; the whole space when omitted

    Returns:
        OracleResult with the exact maximum and optimizer count
    """
    config = get_config()
    size = params.matrix_count
    bound = config.oracle_cap if cap is None else cap
    if not force and size > bound:
        raise EnumerationCapError("decoding matrices", size, bound)
    if size > _INDEX_LIMIT:
        raise EnumerationCapError("matrix indices", size, _INDEX_LIMIT)
    limit = config.optimizer_limit if limit is None else limit
    stop = size if stop is None else stop
    if not 0 <= start <= stop <= size:
        raise InvalidInputError(f"matrix range [{start}, {stop}) outside [0, {size})")

    d, words = params.d, params.word_count
    table = _similarity_table(params)
    powers = words ** np.arange(d - 1, -1, -1, dtype=np.int64)
    block = max(1, _BLOCK_ELEMENTS // (d * words))

    best: Optional[int] = None
    count = 0
    indices: List[int] = []
    for lo in range(start, stop, block):
        hi = min(lo + block, stop)
        t = np.arange(lo, hi, dtype=np.int64)
        rows = (t[:, None] // powers[None, :]) % words
        totals = table[rows].max(axis=1).sum(axis=1)
        block_best = int(totals.max())
        hits = np.flatnonzero(totals == block_best)
        if best is None or block_best > best:
            best, count, indices = block_best, 0, []
        if block_best == best:
            count += len(hits)
            if len(indices) <= limit:
                indices.extend(int(lo + h) for h in hits[: limit + 1 - len(indices)])
        logger.debug("scanned matrices [%d, %d) of %s", lo, hi, params)

    logger.info("oracle %s: %d matrices, %d optimizers", params, stop - start, count)
    max_value = None if best is None else Fraction(best, params.n * words)
    kept = tuple(indices) if count <= limit else None
    return OracleResult(params, max_value, count, kept, stop - start, limit)
