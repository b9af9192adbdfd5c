"""Value-preserving letter reassignment and normalization to permutation columns."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..game.strategy import DecodingMatrix
from ..utils.config import get_config
from ..utils.errors import InvalidInputError, PreconditionError
from ..value.evaluator import strategy_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImprovementStep:
    """Entry (row, column) changed from from_letter to to_letter."""

    column: int
    row: int
    from_letter: int
    to_letter: int

    def __post_init__(self):
        if self.from_letter == self.to_letter:
            raise InvalidInputError("an improvement step must change the letter")

    def apply(self, f: DecodingMatrix) -> DecodingMatrix:
        if f.rows[self.row][self.column] != self.from_letter:
            raise InvalidInputError(
                f"step expects letter {self.from_letter} at row {self.row}, "
                f"column {self.column}; found {f.rows[self.row][self.column]}"
            )
        return reassign_letter(f, self.column, self.row, self.to_letter)


@dataclass(frozen=True)
class NormalizationTrace:
    """
    A run of reassignment steps from `initial` to `final`.

    `values` holds the value before any step followed by the value after each
    step; it is None when the word space exceeds the enumeration cap.
    """

    initial: DecodingMatrix
    steps: Tuple[ImprovementStep, ...]
    final: DecodingMatrix
    values: Optional[Tuple[Fraction, ...]] = None

    def replay(self) -> DecodingMatrix:
        g = self.initial
        for step in self.steps:
            g = step.apply(g)
        return g


def _check_index(name: str, value: int, bound: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < bound:
        raise InvalidInputError(f"{name} must lie in [0, {bound - 1}], got {value!r}")


def reassign_letter(f: DecodingMatrix, j: int, y1: int, a: int) -> DecodingMatrix:
    """
    Replace f[y1][j] by a letter missing from column j.

    Requires (i) no row holds a in column j and (ii) the current letter
    b = f[y1][j] also appears in another row of column j. The result is never
    worse than f.

    Raises:
        PreconditionError: `conditions` lists the failed labels "i" and/or "ii"
    """
    _check_index("column", j, f.n)
    _check_index("row", y1, f.d)
    _check_index("letter", a, f.d)

    column = f.column(j)
    b = column[y1]
    failed = []
    if a in column:
        failed.append("i")
    if column.count(b) < 2:
        failed.append("ii")
    if failed:
        reasons = {
            "i": f"letter {a} already appears in column {j}",
            "ii": f"letter {b} at row {y1} is not duplicated in column {j}",
        }
        raise PreconditionError(
            "; ".join(f"({c}) {reasons[c]}" for c in failed), failed
        )
    return f.with_entry(y1, j, a)


def _next_step(g: DecodingMatrix, j: int) -> Optional[ImprovementStep]:
    column = g.column(j)
    counts = Counter(column)
    absent = [a for a in range(g.d) if a not in counts]
    if not absent:
        return None
    y1 = min(y for y in range(g.d) if counts[column[y]] > 1)
    return ImprovementStep(column=j, row=y1, from_letter=column[y1], to_letter=absent[0])


def normalize(
    f: DecodingMatrix,
    with_values: bool = True,
    cap: Optional[int] = None,
) -> NormalizationTrace:
    """
    Turn f into a matrix whose columns are all permutations, one reassignment
    at a time.

    Columns are scanned left to right; within a column the smallest absent
    letter goes to the lowest row holding a duplicated letter.

    Args:
        f: Starting matrix
        with_values: Record the value after every step when d^n fits the cap
        cap: Word enumeration cap for the value trace

    Returns:
        NormalizationTrace; at most d·n steps
    """
    limit = get_config().word_cap if cap is None else cap
    track = with_values and f.params.word_count <= limit

    g = f
    steps: List[ImprovementStep] = []
    values: List[Fraction] = [strategy_value(g, cap=limit)] if track else []
    for j in range(f.n):
        step = _next_step(g, j)
        while step is not None:
            g = reassign_letter(g, step.column, step.row, step.to_letter)
            steps.append(step)
            if track:
                values.append(strategy_value(g, cap=limit))
            step = _next_step(g, j)

    logger.info("normalized %s in %d steps", f.params, len(steps))
    return NormalizationTrace(
        initial=f,
        steps=tuple(steps),
        final=g,
        values=tuple(values) if track else None,
    )
