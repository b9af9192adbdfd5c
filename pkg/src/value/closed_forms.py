"""Closed-form optimal values for the two exceptional regimes."""

from fractions import Fraction

from ..utils.errors import DomainError
from .multiplicity import pascal


def two_position_value(d: int) -> Fraction:
    """
    Optimal value for words of length 2: d words are matched exactly,
    the other d² − d in one position.

    Returns:
        (1·d + ½·(d − 1)·d) / d² = (d + 1) / (2d)
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise DomainError(f"alphabet size must be a positive integer, got {d!r}")
    return (d + Fraction(d * (d - 1), 2)) / d**2


def binary_even_value(n: int) -> Fraction:
    """
    Optimal value for a binary alphabet and even word length.

    Returns:
        2^(-n) · Σ_k C(n, k) · max(k, n − k) / n
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2 or n % 2:
        raise DomainError(f"word length must be an even integer ≥ 2, got {n!r}")
    total = sum(c * max(k, n - k) for k, c in enumerate(pascal.row(n)))
    return Fraction(total, n * 2**n)
