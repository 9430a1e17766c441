from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diaglab import (
    Ending,
    InvalidShape,
    NotFound,
    OutOfAlphabet,
    OutOfRange,
    WritableNumber,
    applicative_count,
    applicative_list,
    applicative_rank,
    applicative_unrank,
    di,
    di_inverse,
    l1,
    ldi,
    ldi_dprime,
    lex_list,
    select,
    selector_decode,
    selector_encode,
    value_of,
    w2_list,
    w2_rank,
)
from diaglab.enumerations import finite_list, ndigits, pair_rank, pair_unrank
from diaglab.streams import TerminatingStream


def test_di_examples():
    assert str(di(0)) == "0.0"
    assert str(di(6)) == "0.011"
    assert str(di(1234, 10)) == "0.4321"
    assert str(di(10, 10)) == "0.01"
    assert di_inverse(WritableNumber.parse("0.0111", 2)) == 14
    assert di_inverse(WritableNumber.parse("0.1100", 2)) == 3


def test_di_inverse_rejects_integer_part():
    with pytest.raises(ValueError):
        di_inverse(WritableNumber.parse("1.1", 2))
    with pytest.raises(ValueError):
        di(-1)


@given(st.integers(0, 10**30), st.integers(2, 16))
def test_di_roundtrip(n, b):
    assert di_inverse(di(n, b)) == n


@given(st.integers(0, 10**12), st.integers(2, 16))
def test_di_value_has_ndigits(n, b):
    w = di(n, b)
    assert 0 <= value_of(w) < 1
    assert len(w.fractional_digits) == max(1, ndigits(n, b))


@given(st.integers(0, 10**6))
def test_pairing_bijection(n):
    r, c = pair_unrank(n)
    assert pair_rank(r, c) == n


def test_pair_walk_covers_triangles():
    for d in range(40):
        cells = {pair_unrank(n) for n in range(d * (d + 1) // 2, (d + 1) * (d + 2) // 2)}
        assert cells == {(r, d - r) for r in range(d + 1)}


def test_w2_first_entries():
    want = "0.0 0.1 1.0 0.01 1.1 10.0 0.11 1.01 10.1 11.0 0.001 1.11 10.01 11.1 100.0".split()
    assert [str(w2_list(n)) for n in range(15)] == want


def test_w2_injective():
    seen = {w2_list(n) for n in range(5000)}
    assert len(seen) == 5000


@given(st.integers(0, 10**9))
def test_w2_rank_roundtrip(n):
    assert w2_rank(w2_list(n)) == n


def test_selector_examples():
    assert select([3, 42, 2, 22], 0b1001) == [3, 22]
    assert selector_encode([0, 3]) == 9
    assert selector_decode(0) == frozenset()
    with pytest.raises(ValueError):
        selector_decode(-1)
    with pytest.raises(IndexError):
        select([1, 2], 0b100)


@given(st.integers(0, 2**200))
def test_selector_roundtrip(code):
    assert selector_encode(selector_decode(code)) == code


@given(st.frozensets(st.integers(0, 300)))
def test_selector_roundtrip_sets(items):
    assert selector_decode(selector_encode(items)) == items


def test_applicative_small():
    assert applicative_list(1) == ["1"]
    assert applicative_list(2) == ["1", "2", "11", "12", "21", "22"]
    assert lex_list(2, 2) == ["1", "2", "11", "12", "21", "22"]
    assert applicative_list(3)[6:12] == ["3", "13", "23", "31", "32", "33"]
    assert applicative_count(3, 3) == 39


def test_applicative_shape_and_alphabet_errors():
    with pytest.raises(InvalidShape):
        applicative_list(3, 2)
    with pytest.raises(OutOfAlphabet):
        applicative_rank("14", 3)
    with pytest.raises(OutOfRange):
        applicative_rank("1111", 3)
    with pytest.raises(OutOfRange):
        applicative_unrank(40, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_applicative_rank_matches_list(n):
    words = applicative_list(n)
    for i, w in enumerate(words, 1):
        assert applicative_rank(w, n) == i
        assert applicative_unrank(i, n) == w


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, applicative_count(n, n)))))
def test_applicative_rank_unrank_large(args):
    n, i = args
    assert applicative_rank(applicative_unrank(i, n), n) == i


def test_ldi_entries_and_rank():
    lst = ldi()
    assert [lst.entry(n).text(3) for n in range(4)] == ["0.000...", "0.100...", "0.010...", "0.110..."]
    assert lst.rank_of(WritableNumber.parse("0.011", 2)) == 6
    with pytest.raises(NotFound):
        lst.rank_of(WritableNumber.parse("1.0", 2))


def test_ldi_max_ending_keeps_zero():
    lst = ldi(10, Ending.MAX)
    assert lst.entry(0).digits(3) == (0, 0, 0)
    assert lst.entry(1).digits(3) == (0, 9, 9)
    assert lst.entry(12).digits(4) == (2, 0, 9, 9)


def test_ldi_dprime():
    lst = ldi_dprime()
    assert lst.start_index == 1
    assert lst.entry(3).text(5) == "0.10111..."
    with pytest.raises(IndexError):
        lst.entry(0)
    with pytest.raises(NotFound):
        lst.rank_of(WritableNumber.parse("0.0", 2))


def test_l1():
    lst = l1()
    assert lst.entry(0).text(3) == "0.100..."
    assert lst.entry(4).text(5) == "0.01110..."
    assert lst.rank_of(WritableNumber.parse("0.0111", 2)) == 4
    assert lst.rank_of(WritableNumber.parse("0.1", 2)) == 0
    with pytest.raises(NotFound):
        lst.rank_of(WritableNumber.parse("0.101", 2))


def test_finite_list():
    a, b = TerminatingStream(2, (1,)), TerminatingStream(2, (0, 1))
    lst = finite_list([a, b], ["half", "quarter"], start_index=1)
    assert list(lst.indices(10)) == [1, 2]
    assert lst.label(2) == "quarter"
    assert lst.entry(2).value_hint == Fraction(1, 4)
    with pytest.raises(IndexError):
        lst.entry(3)
    with pytest.raises(ValueError):
        finite_list([])
    with pytest.raises(ValueError):
        finite_list([a, TerminatingStream(3, (1,))])


def test_digit_bound_is_sound_for_ldi():
    lst = ldi()
    bound = lst.digit_bound
    for n in range(bound.from_row, 3000):
        k = bound.digits(n)
        assert lst.entry(n).digits(4, start=k + 1) == (bound.tail_digit,) * 4
        # the diagonalizer's proof step needs n - digits(n) non-decreasing
        if n > bound.from_row:
            assert n - k >= (n - 1) - bound.digits(n - 1)
