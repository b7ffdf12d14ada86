import decimal
from fractions import Fraction as F

import numpy as np
import pytest

from strictdom import error
from strictdom.utils import json_utils
from strictdom.utils.numerals import format_rational, to_point, to_rational


@pytest.mark.parametrize("value,expected", [
    (3, F(3)),
    ('1.2', F(6, 5)),
    (' 6/5 ', F(6, 5)),
    ('-0.25', F(-1, 4)),
    (decimal.Decimal('0.1'), F(1, 10)),
    (F(2, 3), F(2, 3)),
    (np.int64(4), F(4)),
    ('2.5e3', F(2500)),
    ('1E-2', F(1, 100)),
    (decimal.Decimal('1e1000'), F(10 ** 1000)),
])
def test_to_rational(value, expected):
    assert to_rational(value) == expected


@pytest.mark.parametrize("value", [0.1, True, 'abc', '1/0', 'NaN', decimal.Decimal('Infinity'), None, [1],
                                   '1e', '1e999999999', '-3E-1001', decimal.Decimal('1e-5000')])
def test_to_rational_rejects(value):
    with pytest.raises(error.InvalidNumeral):
        to_rational(value)


@pytest.mark.parametrize("value,text", [(F(6, 5), '6/5'), (3, '3/1'), (F(-1, 4), '-1/4'), (0, '0/1')])
def test_format_rational(value, text):
    assert format_rational(value) == text


def test_to_point():
    assert to_point([1, '1/2', '0.25']) == (F(1), F(1, 2), F(1, 4))


def test_json_dumps_is_canonical():
    text = json_utils.dumps({'b': F(1, 3), 'a': np.array([1, 2]), 'c': (np.int64(5),)})
    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": "1/3",\n  "c": [\n    5\n  ]\n}\n'


def test_json_loads_is_exact():
    assert json_utils.loads(b'{"x": 0.1}') == {'x': decimal.Decimal('0.1')}
    with pytest.raises(error.InvalidNumeral):
        json_utils.loads('{"x": NaN}')


def test_json_exponents_are_bounded():
    data = json_utils.loads('{"x": 1e999999999}')
    with pytest.raises(error.InvalidNumeral):
        to_rational(data['x'])
