"""Decoding matrices, randomized strategies and canonical constructors."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..utils.errors import InvalidInputError
from .params import GameParams
from .words import Word, sim, validate_word

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class DecodingMatrix:
    """
    Bob's complete strategy: rows[y][j] is his answer to question j
    after receiving message y.
    """

    params: GameParams
    rows: Tuple[Word, ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if len(rows) != self.params.d:
            raise InvalidInputError(
                f"expected {self.params.d} rows for {self.params}, got {len(rows)}"
            )
        for y, row in enumerate(rows):
            if len(row) != self.params.n:
                raise InvalidInputError(
                    f"row {y} has length {len(row)}, expected {self.params.n}"
                )
            for letter in row:
                if isinstance(letter, bool) or not isinstance(letter, int):
                    raise InvalidInputError(f"row {y} holds a non-integer entry {letter!r}")
                if not 0 <= letter < self.params.d:
                    raise InvalidInputError(
                        f"row {y} holds {letter}, outside [0, {self.params.d - 1}]"
                    )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "DecodingMatrix":
        """Build a matrix inferring d from the row count and n from the row length."""
        rows = [tuple(row) for row in rows]
        if not rows or not rows[0]:
            raise InvalidInputError("a decoding matrix needs at least one non-empty row")
        return cls(GameParams(n=len(rows[0]), d=len(rows)), tuple(rows))

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def d(self) -> int:
        return self.params.d

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    def with_entry(self, y: int, j: int, letter: int) -> "DecodingMatrix":
        """Copy of the matrix with rows[y][j] replaced."""
        rows = [list(row) for row in self.rows]
        rows[y][j] = letter
        return DecodingMatrix(self.params, tuple(tuple(row) for row in rows))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.d, self.n)

    def __str__(self) -> str:
        return " ".join("".join(str(letter) for letter in row) for row in self.rows)


def best_response_encode(f: DecodingMatrix, x: Sequence[int]) -> int:
    """
    Alice's best message for word x: the lowest y maximizing sim(f_y, x).

    Args:
        f: Bob's decoding matrix
        x: Alice's word

    Returns:
        The message letter
    """
    word = validate_word(f.params, x)
    scores = [sim(row, word) for row in f.rows]
    return scores.index(max(scores))


def majority_strategy(params: GameParams) -> DecodingMatrix:
    """Identity decoding: Bob answers every question with the received letter."""
    return DecodingMatrix(
        params, tuple(tuple([y] * params.n) for y in range(params.d))
    )


def _validate_permutations(params: GameParams, perms: Sequence[Sequence[int]]) -> Tuple[Permutation, ...]:
    perms = tuple(tuple(p) for p in perms)
    if len(perms) != params.n:
        raise InvalidInputError(f"expected {params.n} permutations, got {len(perms)}")
    letters = list(range(params.d))
    for j, p in enumerate(perms):
        if sorted(p) != letters:
            raise InvalidInputError(
                f"permutation {j} is not a bijection on {params.d} letters: {p}"
            )
    return perms


def apply_column_permutations(
    g: DecodingMatrix, perms: Sequence[Sequence[int]]
) -> DecodingMatrix:
    """
    Relabel the letters of each column: result[y][j] = perms[j][g[y][j]].

    Args:
        g: Decoding matrix
        perms: One permutation per column, perms[j][letter] is the image of letter

    Returns:
        The relabelled matrix
    """
    perms = _validate_permutations(g.params, perms)
    return DecodingMatrix(
        g.params,
        tuple(tuple(perms[j][letter] for j, letter in enumerate(row)) for row in g.rows),
    )


def compose_permutations(
    outer: Sequence[Sequence[int]], inner: Sequence[Sequence[int]]
) -> Tuple[Permutation, ...]:
    """Column-wise composition: applying inner then outer."""
    if len(outer) != len(inner):
        raise InvalidInputError("permutation tuples have different lengths")
    return tuple(
        tuple(q[p[letter]] for letter in range(len(p))) for q, p in zip(outer, inner)
    )


def column_permutations(g: DecodingMatrix) -> Tuple[Permutation, ...]:
    """
    The unique tuple perms with apply_column_permutations(majority, perms) == g.

    Raises:
        InvalidInputError: a column of g is not a permutation of the alphabet
    """
    perms = tuple(g.columns())
    return _validate_permutations(g.params, perms)


@dataclass(frozen=True)
class RandomizedStrategy:
    """A probability distribution over decoding matrices of one game."""

    components: Tuple[Tuple[Fraction, DecodingMatrix], ...]

    def __post_init__(self):
        components = tuple((Fraction(w), f) for w, f in self.components)
        if not components:
            raise InvalidInputError("a randomized strategy needs at least one component")
        params = components[0][1].params
        for weight, f in components:
            if weight <= 0:
                raise InvalidInputError(f"component weights must be positive, got {weight}")
            if f.params != params:
                raise InvalidInputError(
                    f"mixed games in one strategy: {params} and {f.params}"
                )
        total = sum(weight for weight, _ in components)
        if total != 1:
            raise InvalidInputError(f"component weights sum to {total}, not 1")
        object.__setattr__(self, "components", components)

    @property
    def params(self) -> GameParams:
        return self.components[0][1].params
