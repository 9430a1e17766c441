from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diaglab import Ending, NoSuchRepresentation, WritableNumber, convert_ending, stream_of_rational, truncate, value_of
from diaglab.numeral import is_writable, render
from diaglab.streams import (
    TailKind,
    TerminatingStream,
    approximate,
    limit_of_prefix,
    stream_of_writable,
    with_ending,
)

unit_fractions = st.builds(
    lambda q, p: Fraction(p % q, q), st.integers(1, 500), st.integers(0, 10**6)
)


def test_convert_ending_examples():
    s = convert_ending(WritableNumber.parse("0.1", 2), Ending.MAX)
    assert s.digits(5) == (0, 1, 1, 1, 1)
    assert s.value_hint == Fraction(1, 2)
    assert convert_ending(WritableNumber.parse("0.1", 10), Ending.MAX).text(4) == "0.0999..."
    with pytest.raises(NoSuchRepresentation):
        convert_ending(WritableNumber.parse("0.0", 2), Ending.MAX)


def test_rational_stream_period():
    s = stream_of_rational(Fraction(1, 6), 10)
    assert s.preperiod == (1,) and s.period == (6,)
    assert s.tail.kind is TailKind.UNKNOWN
    assert stream_of_rational(Fraction(1, 7), 10).period == (1, 4, 2, 8, 5, 7)


def test_rational_stream_trivial_tails():
    s = stream_of_rational(Fraction(3, 8), 2)
    assert s.tail.kind is TailKind.ZERO and s.tail.start == 4
    m = stream_of_rational(Fraction(3, 8), 2, Ending.MAX)
    assert m.digits(6) == (0, 1, 0, 1, 1, 1)
    assert m.tail.kind is TailKind.MAX and m.tail.start == 4


def test_truncate_keeps_k_plus_one_digits():
    s = stream_of_rational(Fraction(1, 3), 2)
    assert str(truncate(s, 0)) == "0.0"
    assert str(truncate(s, 3)) == "0.0101"
    with pytest.raises(ValueError):
        truncate(s, -1)


def test_positions_start_at_one():
    with pytest.raises(IndexError):
        stream_of_rational(Fraction(1, 2), 2).digit_at(0)


def test_rejects_values_outside_unit_interval():
    with pytest.raises(ValueError):
        stream_of_rational(Fraction(3, 2), 2)
    with pytest.raises(ValueError):
        stream_of_writable(WritableNumber.parse("1.1", 2))


def test_with_ending_leaves_zero_and_unknown_alone():
    zero = stream_of_rational(0, 2)
    assert with_ending(zero, Ending.MAX) is zero
    third = stream_of_rational(Fraction(1, 3), 2)
    assert with_ending(third, Ending.MAX) is third


def test_limit_of_prefix():
    assert limit_of_prefix(WritableNumber.parse("0.01", 2), 1) == Fraction(1, 2)
    assert limit_of_prefix(WritableNumber.parse("0.0", 10), 9) == Fraction(1, 10)
    assert limit_of_prefix(WritableNumber.parse("0.11", 10), 0) == Fraction(11, 100)


def test_terminating_stream_text():
    assert TerminatingStream(2, (1, 1)).text(4) == "0.1100..."


@given(unit_fractions, st.integers(2, 16), st.integers(0, 64))
def test_approximation_bound(x, b, k):
    s = stream_of_rational(x, b)
    w = approximate(s, k)
    assert 0 <= x - value_of(w) < Fraction(1, b**k)


@given(unit_fractions, st.integers(2, 16))
def test_both_endings_share_a_value(x, b):
    if x == 0:
        return
    zero = stream_of_rational(x, b, Ending.ZERO)
    top = stream_of_rational(x, b, Ending.MAX)
    if zero.tail.kind is TailKind.UNKNOWN:
        assert top.digits(40) == zero.digits(40)
        return
    assert top.tail.kind is TailKind.MAX
    n = top.tail.start - 1
    assert limit_of_prefix(top.prefix(max(n, 1)), b - 1) == x


@given(unit_fractions, st.integers(2, 16))
def test_writable_streams_match_render(x, b):
    if not x or not is_writable(x, b):
        return
    w = render(x, b)
    s = stream_of_writable(w)
    assert s.digits(len(w.fractional_digits)) == w.fractional_digits
    assert s.value_hint == x
