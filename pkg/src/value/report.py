"""Value reports."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..game.params import GameParams
from ..game.strategy import DecodingMatrix
from ..utils.errors import InvalidInputError
from .closed_forms import binary_even_value, two_position_value
from .evaluator import strategy_value
from .multiplicity import optimal_value


class ValueMethod(str, Enum):
    WORD_ENUMERATION = "word-enumeration"
    MULTIPLICITY_DP = "multiplicity-dp"
    CLOSED_FORM_TWO_POSITIONS = "closed-form-two-positions"
    CLOSED_FORM_BINARY_EVEN = "closed-form-binary-even"


@dataclass(frozen=True)
class ValueReport:
    """An exact value together with how it was obtained."""

    value: Fraction
    method: ValueMethod
    params: GameParams

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise InvalidInputError(f"a success probability must lie in [0, 1], got {self.value}")


def evaluate(f: DecodingMatrix, cap=None, force: bool = False) -> ValueReport:
    """Value of a decoding matrix by word enumeration."""
    return ValueReport(strategy_value(f, cap, force), ValueMethod.WORD_ENUMERATION, f.params)


def optimal_value_report(params: GameParams, prefer_closed_form: bool = True) -> ValueReport:
    """
    Optimal value of a game, through a closed form when the regime has one.

    Args:
        params: Game parameters
        prefer_closed_form: Use the closed forms for n = 2 and for d = 2 with even n

    Returns:
        ValueReport for the optimal value
    """
    if prefer_closed_form and params.n == 2:
        return ValueReport(
            two_position_value(params.d), ValueMethod.CLOSED_FORM_TWO_POSITIONS, params
        )
    if prefer_closed_form and params.d == 2 and params.n % 2 == 0:
        return ValueReport(
            binary_even_value(params.n), ValueMethod.CLOSED_FORM_BINARY_EVEN, params
        )
    return ValueReport(optimal_value(params), ValueMethod.MULTIPLICITY_DP, params)
