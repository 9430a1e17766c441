from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from diaglab import NotWritable, WritableNumber, format_rational, is_writable, render, split, value_of
from diaglab.numeral import Ending, digits_to_int, int_digits, parse_rational

bases = st.integers(min_value=2, max_value=36)


@st.composite
def numerals(draw, base=None):
    b = base or draw(bases)
    ip = draw(st.lists(st.integers(0, b - 1), min_size=1, max_size=6))
    fp = draw(st.lists(st.integers(0, b - 1), min_size=1, max_size=12))
    return WritableNumber(b, tuple(ip), tuple(fp))


def test_value_examples():
    assert value_of(WritableNumber.parse("0.101", 2)) == Fraction(5, 8)
    assert value_of(WritableNumber.parse("10.01", 2)) == Fraction(9, 4)
    assert value_of(WritableNumber.parse("0.11", 10)) == Fraction(11, 100)
    assert value_of(WritableNumber.parse("ff.8", 16)) == Fraction(511, 2)


def test_render_examples():
    assert str(render(Fraction(3, 4), 2)) == "0.11"
    assert str(render(Fraction(1, 10), 10)) == "0.1"
    assert str(render(5, 2)) == "101.0"
    assert str(render(0, 7)) == "0.0"
    with pytest.raises(NotWritable):
        render(Fraction(1, 3), 2)
    with pytest.raises(ValueError):
        render(Fraction(-1, 2), 2)


def test_leading_zeros_dropped_trailing_kept():
    w = WritableNumber(2, (0, 0, 1), (1, 0, 0))
    assert w.integer_digits == (1,)
    assert w.fractional_digits == (1, 0, 0)
    assert not w.is_canonical
    assert w.canonical().fractional_digits == (1,)
    assert WritableNumber(2, (), ()).fractional_digits == (0,)


def test_invalid_digits_and_bases():
    with pytest.raises(ValueError):
        WritableNumber(2, (2,), (0,))
    with pytest.raises(ValueError):
        WritableNumber(1, (0,), (0,))
    with pytest.raises(ValueError):
        WritableNumber.parse("0.2", 2)
    with pytest.raises(ValueError):
        WritableNumber.parse(".", 10)


def test_parse_uppercase_and_symbols():
    assert WritableNumber.parse("A.8", 16) == WritableNumber.parse("a.8", 16)
    w = WritableNumber.parse("ba.b", 2, symbols="ab")
    assert value_of(w) == Fraction(5, 2)
    assert w.render("ab") == "ba.b"


def test_split():
    ip, fp = split(WritableNumber.parse("110.011", 2))
    assert str(ip) == "110.0" and str(fp) == "0.011"


def test_rational_formatting():
    assert format_rational(Fraction(6, 8)) == "3/4"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational(" 11/100 ") == Fraction(11, 100)


def test_ending_tail_digit():
    assert Ending.ZERO.tail_digit(10) == 0
    assert Ending.MAX.tail_digit(10) == 9


@given(numerals())
def test_render_inverts_value(w):
    assert render(value_of(w), w.base) == w.canonical()


@given(numerals())
def test_trailing_zeros_do_not_change_value(w):
    padded = WritableNumber(w.base, w.integer_digits, w.fractional_digits + (0, 0))
    assert value_of(padded) == value_of(w)


@given(st.integers(0, 10**60), bases)
def test_int_digits_roundtrip(n, b):
    assert digits_to_int(int_digits(n, b), b) == n


@given(st.integers(1, 2**64), st.integers(4400, 5200), st.sampled_from([3, 10]))
def test_long_digit_strings(seed, width, b):
    # past the str<->int conversion limit
    n = b**width + seed
    assert digits_to_int(int_digits(n, b), b) == n


@given(st.integers(1, 10**6), st.integers(1, 10**6), bases)
def test_is_writable_matches_denominator_factors(p, q, b):
    den = Fraction(p, q).denominator
    while True:
        g = gcd(den, b)
        if g == 1:
            break
        den //= g
    assert is_writable(Fraction(p, q), b) == (den == 1)


@pytest.mark.parametrize("base", range(2, 17))
def test_one_over_prime(base):
    primes = [p for p in range(2, 100) if all(p % q for q in range(2, p))]
    for p in primes:
        assert is_writable(Fraction(1, p), base) == (base % p == 0)
