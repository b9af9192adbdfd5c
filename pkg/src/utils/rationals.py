"""Exact rational formatting and parsing."""

from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction

from .errors import InvalidInputError


def format_rational(value: Fraction) -> str:
    """Render a fraction as "p/q", always with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    """
    Parse "p/q", an integer, or a decimal string into an exact fraction.

    Floats are rejected: they would silently lose exactness.
    """
    if isinstance(text, bool) or isinstance(text, float):
        raise InvalidInputError(f"expected an exact rational, got {text!r}")
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"not a rational number: {text!r}") from e


def to_decimal_string(value: Fraction, digits: int = 12) -> str:
    """
    Round a fraction to `digits` significant digits, half-even.

    Args:
        value: Exact value
        digits: Significant digits

    Returns:
        Decimal string with at least one fractional digit ("1.0", "0.75")
    """
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    text = format(quotient.normalize(), "f")
    if "." not in text:
        text += ".0"
    return text
