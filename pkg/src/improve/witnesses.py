"""Words certifying that a single-entry change strictly loses value."""

from typing import List

from ..game.strategy import DecodingMatrix
from ..game.words import Word
from ..optimality.properties import all_columns_permutations, non_permutation_columns
from ..utils.errors import DomainError, InvalidInputError, PreconditionError


def merge_entry(g: DecodingMatrix, j: int, y1: int, y2: int) -> DecodingMatrix:
    """Copy of g with g[y1][j] overwritten by g[y2][j]."""
    return g.with_entry(y1, j, g.rows[y2][j])


def strictness_witness(g: DecodingMatrix, j: int, y1: int, y2: int) -> Word:
    """
    A word approximated strictly worse once g[y1][j] is overwritten by g[y2][j].

    Position j gets g[y1][j]. The other positions, in index order, copy row y1
    for the first half and row y2 for the rest; for even n the last of them
    gets the smallest letter differing from both rows there.

    Args:
        g: Matrix whose columns are all permutations
        j: Column of the changed entry
        y1: Row losing its letter
        y2: Row whose letter is copied

    Raises:
        DomainError: n ≤ 2, or d = 2 with even n
        PreconditionError: g has a column that is not a permutation
    """
    n, d = g.n, g.d
    if n <= 2 or (d <= 2 and n % 2 == 0) or d < 2:
        raise DomainError(
            f"no strictness witness exists for {g.params}: needs n > 2 and d > 2 or odd n"
        )
    if not 0 <= j < n:
        raise InvalidInputError(f"column must lie in [0, {n - 1}], got {j}")
    if not (0 <= y1 < d and 0 <= y2 < d) or y1 == y2:
        raise InvalidInputError(f"rows must be distinct and in [0, {d - 1}], got {y1}, {y2}")
    if not all_columns_permutations(g):
        raise PreconditionError("every column must be a permutation of the alphabet", ["permutation-columns"])

    first, second = g.rows[y1], g.rows[y2]
    others = [p for p in range(n) if p != j]
    half = (n - 1) // 2

    x: List[int] = [0] * n
    x[j] = first[j]
    for p in others[:half]:
        x[p] = first[p]
    for p in others[half:]:
        x[p] = second[p]
    if n % 2 == 0:
        last = others[-1]
        x[last] = min(c for c in range(d) if c not in (first[last], second[last]))
    return tuple(x)


def binary_deficit_witness(f: DecodingMatrix) -> Word:
    """
    A word that no row of f matches in n/2 positions or more.

    f is a binary matrix of even length n > 2 with at least two constant
    columns; the word starts with the letters missing from the first two of
    them. Elsewhere positions where both rows agree get the other letter, and
    positions where they differ are split between the rows, the first half
    following row 0.

    Raises:
        DomainError: d ≠ 2, odd n, or n ≤ 2
        PreconditionError: at most one column of f is not a permutation
    """
    n = f.n
    if f.d != 2 or n % 2 or n <= 2:
        raise DomainError(
            f"the binary deficit witness needs d = 2 and even n > 2, got {f.params}"
        )
    bad = non_permutation_columns(f)
    if len(bad) < 2:
        raise PreconditionError(
            "at most one column fails to be a permutation; no deficit word exists",
            ["two-constant-columns"],
        )

    j1, j2 = bad[0], bad[1]
    zero, one = f.rows
    x: List[int] = [0] * n
    x[j1] = 1 - zero[j1]
    x[j2] = 1 - zero[j2]

    differing = []
    for p in range(n):
        if p in (j1, j2):
            continue
        if zero[p] == one[p]:
            x[p] = 1 - zero[p]
        else:
            differing.append(p)
    half = len(differing) // 2
    for p in differing[:half]:
        x[p] = zero[p]
    for p in differing[half:]:
        x[p] = one[p]
    return tuple(x)
