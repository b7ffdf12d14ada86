"""Exact numerals.

Payoffs, weights and probabilities are ``fractions.Fraction`` throughout.
Input may be an integer, a decimal ("1.2") or a ratio ("6/5"); output is
always the canonical ratio string "p/q", integers included ("3/1").
"""
import decimal
import numbers
from fractions import Fraction

from strictdom import error

# Largest decimal exponent accepted, in either direction.
MAX_EXPONENT = 1000


def _from_decimal(value):
    if not value.is_finite():
        raise error.InvalidNumeral('Non-finite numeral: {}'.format(value))
    if abs(value.as_tuple().exponent) > MAX_EXPONENT:
        raise error.InvalidNumeral('Exponent of {} is beyond +/-{}'.format(value, MAX_EXPONENT))
    return Fraction(value)


def to_rational(value):
    """Convert an input numeral to an exact Fraction.

    Binary floats are refused: 0.1 has no exact decimal meaning once it has
    been parsed into a double. JSON input should be read with
    ``parse_float=decimal.Decimal`` (see ``json_utils.loads``).
    """
    if isinstance(value, bool):
        raise error.InvalidNumeral('Booleans are not numerals: {!r}'.format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, decimal.Decimal):
        return _from_decimal(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if 'e' in text.lower():
                return _from_decimal(decimal.Decimal(text))
            return Fraction(text)
        except (ValueError, ZeroDivisionError, decimal.InvalidOperation):
            raise error.InvalidNumeral('Malformed numeral: {!r}'.format(value))
    if isinstance(value, float):
        raise error.InvalidNumeral('Binary float {!r} is not exact; pass it as a string'.format(value))
    raise error.InvalidNumeral('Unsupported numeral type {}: {!r}'.format(type(value).__name__, value))


def format_rational(value):
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def to_point(values):
    """Tuple of Fractions from any iterable of numerals."""
    return tuple(to_rational(v) for v in values)
