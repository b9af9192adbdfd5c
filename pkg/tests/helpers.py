"""Shared constructors and a plain-Python reference evaluator."""

import itertools
from fractions import Fraction
from typing import Iterator

from src.game.params import GameParams
from src.game.strategy import DecodingMatrix


def m(*rows: str) -> DecodingMatrix:
    """Matrix from digit strings, one per row: m("00", "11")."""
    return DecodingMatrix.from_rows([[int(c) for c in row] for row in rows])


def word(text: str):
    return tuple(int(c) for c in text)


def all_matrices(params: GameParams) -> Iterator[DecodingMatrix]:
    """Every decoding matrix in row-major lexicographic order."""
    n, d = params.n, params.d
    for entries in itertools.product(range(d), repeat=d * n):
        yield DecodingMatrix(params, tuple(tuple(entries[y * n : (y + 1) * n]) for y in range(d)))


def reference_value(f: DecodingMatrix) -> Fraction:
    """Value by direct enumeration, independent of the numpy path."""
    total = 0
    for x in itertools.product(range(f.d), repeat=f.n):
        total += max(sum(a == b for a, b in zip(row, x)) for row in f.rows)
    return Fraction(total, f.n * f.d**f.n)


def best_sim(f: DecodingMatrix, x) -> int:
    return max(sum(a == b for a, b in zip(row, x)) for row in f.rows)
