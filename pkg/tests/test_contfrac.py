import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrat.contfrac import (INFINITY, Rational, cf_value, evaluate_digits, format_cf, is_even_cf,
                           parse_cf, parse_rational, to_even_cf)


def test_examples():
    assert to_even_cf(Rational(0, 1)) == (-1, 1)
    assert to_even_cf(INFINITY) == ()
    assert to_even_cf(Rational(5, 2)) == (2, 2)
    assert to_even_cf(Rational(-3, 2)) == (-1, -2)
    assert cf_value((2, 2)) == Rational(5, 2)
    assert cf_value(()) == INFINITY
    assert cf_value((0, 1, 1, 1)) == Rational(2, 3)


def test_rational_normalization():
    assert Rational(4, -6) == Rational(-2, 3)
    assert Rational(-5, 0) == INFINITY
    with pytest.raises(ValueError):
        Rational(0, 0)
    assert parse_rational("oo") == INFINITY
    assert parse_rational("-3/6") == Rational(-1, 2)


def test_rejects_odd_expansions():
    with pytest.raises(ValueError):
        cf_value((2,))
    with pytest.raises(ValueError):
        cf_value((2, -1))


def test_round_trip_box():
    for r in range(-200, 201, 7):
        for s in range(1, 201, 3):
            if math.gcd(r, s) != 1:
                continue
            x = Rational(r, s)
            digits = to_even_cf(x)
            assert is_even_cf(digits)
            assert cf_value(digits) == x


@given(st.fractions(max_denominator=10 ** 6))
def test_round_trip_and_sign_dichotomy(f):
    x = Rational.of(f)
    digits = to_even_cf(x)
    assert len(digits) % 2 == 0
    assert cf_value(digits) == x
    assert Fraction(evaluate_digits(digits).r, evaluate_digits(digits).s) == f
    if f > 0:
        assert all(a >= 0 for a in digits)


@given(st.lists(st.integers(-9, 9), max_size=8))
def test_text_round_trip(digits):
    assert parse_cf(format_cf(digits)) == tuple(digits)
