import decimal
import json
from fractions import Fraction

import numpy as np

from strictdom import error
from strictdom.utils.numerals import format_rational


def json_encode_rational(obj):
    """
    JSON can't serialize Fractions or numpy types, so convert: Fractions
    become "p/q" strings, numpy containers and scalars plain python values.
    """
    if isinstance(obj, Fraction):
        return format_rational(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError('Object of type {} is not JSON serializable'.format(type(obj).__name__))


def _reject_constant(name):
    raise error.InvalidNumeral('Non-finite numeral {} in JSON input'.format(name))


def loads(text):
    """Parse JSON keeping decimals exact and refusing NaN/Infinity."""
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    return json.loads(text, parse_float=decimal.Decimal, parse_constant=_reject_constant)


def dumps(obj):
    """Canonical form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, default=json_encode_rational, sort_keys=True, indent=2) + '\n'
