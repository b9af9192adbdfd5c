"""
Optimal values through the distribution of the maximal letter multiplicity.

Majority encoding with identity decoding is optimal, and its success on a
word is (maximal letter multiplicity) / n. Counting words by that maximum is
a big-integer DP over letters: the number of words of length s in which each
of i letters occurs at most m times satisfies

    A_m(s, i + 1) = Σ_{k=0}^{min(m, s)} C(s, k) · A_m(s − k, i).
"""

import logging
import threading
from fractions import Fraction
from operator import mul
from typing import Dict, List, Tuple

from ..game.params import GameParams

logger = logging.getLogger(__name__)


class PascalTriangle:
    """
    Shared binomial-coefficient table.

    Built once to `initial_rows`; larger requests extend it under a lock.
    Reads of rows that already exist need no lock.
    """

    def __init__(self, initial_rows: int = 200):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()
        self.ensure(initial_rows)

    def ensure(self, n: int) -> None:
        """Make rows 0..n available."""
        if n < len(self._rows):
            return
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                last = rows[-1]
                rows.append([1] + [a + b for a, b in zip(last, last[1:])] + [1])

    def row(self, n: int) -> List[int]:
        self.ensure(n)
        return self._rows[n]

    def comb(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


pascal = PascalTriangle()


def _extend_by_letter(prev: List[int], m: int, limit: int) -> List[int]:
    """One DP step: add a letter that may occur at most m times."""
    new = []
    for s in range(limit + 1):
        k_max = min(m, s)
        window = prev[s - k_max : s + 1]
        new.append(sum(map(mul, pascal.row(s)[: k_max + 1], reversed(window))))
    return new


def cumulative_at_most(n: int, d: int, m: int) -> int:
    """
    Number of words of length n over d letters in which no letter occurs
    more than m times.
    """
    if m >= n:
        return d**n
    if m * d < n or m <= 0:
        return 0
    pascal.ensure(n)
    counts = [1 if s <= m else 0 for s in range(n + 1)]
    for i in range(2, d):
        counts = _extend_by_letter(counts, m, min(n, m * i))
        counts.extend([0] * (n + 1 - len(counts)))
    if d == 1:
        return counts[n]
    k_max = min(m, n)
    window = counts[n - k_max : n + 1]
    return sum(map(mul, pascal.row(n)[: k_max + 1], reversed(window)))


def max_multiplicity_counts(n: int, d: int) -> List[int]:
    """
    W(n, d, m) for m = 0..n: the number of words whose most frequent letter
    occurs exactly m times.
    """
    params = GameParams(n=n, d=d)
    cumulative = [cumulative_at_most(params.n, params.d, m) for m in range(n + 1)]
    return [cumulative[0]] + [cumulative[m] - cumulative[m - 1] for m in range(1, n + 1)]


def optimal_value(params: GameParams) -> Fraction:
    """
    Exact optimal success probability of the game.

    Args:
        params: Game parameters; no enumeration cap applies

    Returns:
        (1 / (n·d^n)) · Σ_m m · W(n, d, m)
    """
    counts = max_multiplicity_counts(params.n, params.d)
    total = sum(m * w for m, w in enumerate(counts))
    return Fraction(total, params.n * params.word_count)


def optimal_value_table(n_max: int, d_max: int) -> Dict[Tuple[int, int], Fraction]:
    """
    Optimal values for every 1 ≤ n ≤ n_max, 1 ≤ d ≤ d_max.

    One DP pass per threshold m fills all cells at once, using
    Σ_m m · W(n, d, m) = Σ_{m<n} (d^n − A_m(n, d)).

    Returns:
        Mapping (n, d) -> exact value
    """
    GameParams(n=n_max, d=d_max)  # validates the bounds
    pascal.ensure(n_max)
    excess = [[0] * (d_max + 1) for _ in range(n_max + 1)]
    powers = [[d**n for d in range(d_max + 1)] for n in range(n_max + 1)]

    for m in range(n_max):
        counts = [1 if s <= m else 0 for s in range(n_max + 1)]
        for d in range(1, d_max + 1):
            if d > 1:
                counts = _extend_by_letter(counts, m, min(n_max, m * d))
                counts.extend([0] * (n_max + 1 - len(counts)))
            for n in range(m + 1, n_max + 1):
                excess[n][d] += powers[n][d] - counts[n]
        logger.debug("multiplicity threshold %d of %d done", m + 1, n_max)

    return {
        (n, d): Fraction(excess[n][d], n * powers[n][d])
        for n in range(1, n_max + 1)
        for d in range(1, d_max + 1)
    }
