from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diaglab import (
    Ending,
    S0,
    PoolExhausted,
    WritableNumber,
    apply_shuffle,
    compose,
    ldi,
    ldi_dprime,
    parse_shuffle,
    s0,
    skeleton_reorder,
    swap,
)
from diaglab.enumerations import NotFound, finite_list
from diaglab.presets import real_pool, reordered_pool
from diaglab.shuffles import IDENTITY
from diaglab.streams import stream_of_rational


def test_s0_examples():
    assert (s0(0), s0(1), s0(5)) == (1, 0, 5)
    with pytest.raises(ValueError):
        s0(-1)


def test_s0_shuffled_ldi():
    lst = apply_shuffle(S0, ldi())
    assert lst.entry(0).text(5) == "0.10000..."
    assert lst.entry(1).text(5) == "0.00000..."
    assert lst.rank_of(WritableNumber.parse("0.1", 2)) == 0
    assert lst.meta["shuffles"] == ("s0",)
    assert lst.digit_bound.from_row == 2


def test_self_inverse_on_first_256():
    base = ldi()
    twice = apply_shuffle(S0, apply_shuffle(S0, base))
    assert all(twice.entry(n).digits(10) == base.entry(n).digits(10) for n in range(256))
    same = apply_shuffle(IDENTITY, base)
    assert all(same.entry(n).digits(10) == base.entry(n).digits(10) for n in range(256))


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 200))
def test_swap_is_an_involution(i, j, n):
    s = swap(i, j)
    assert s.inverse(s(n)) == n
    assert s(s(n)) == n
    if n > max(i, j):
        assert s(n) == n


@given(st.lists(st.tuples(st.integers(0, 20), st.integers(0, 20)), max_size=5), st.integers(0, 100))
def test_compose_inverse(pairs, n):
    c = compose(*(swap(i, j) for i, j in pairs))
    assert c.inverse(c(n)) == n
    assert c(c.inverse(n)) == n


def test_compose_order_and_list_application():
    a, b = swap(0, 2), swap(2, 5)
    c = compose(a, b)
    assert c(5) == a(b(5)) == 0
    lst = ldi()
    stepwise = apply_shuffle(b, apply_shuffle(a, lst))
    at_once = apply_shuffle(a.then(b), lst)
    assert [stepwise.entry(n).digits(6) for n in range(8)] == [at_once.entry(n).digits(6) for n in range(8)]


def test_parse_shuffle():
    assert parse_shuffle("s0") is S0
    assert parse_shuffle("identity")(7) == 7
    assert parse_shuffle("swap:2,3")(2) == 3
    c = parse_shuffle("compose:s0+swap:1,4")
    assert c(4) == 0 and c.support_bound == 4
    with pytest.raises(ValueError):
        parse_shuffle("rotate")


def test_rank_after_shuffle():
    lst = apply_shuffle(swap(3, 9), ldi())
    for n in range(20):
        w = lst.entry(n).prefix(6).canonical()
        assert lst.rank_of(w) == n


def test_reorder_table7():
    out = reordered_pool()
    assert [out.label(n) for n in range(1, 8)] == ["0", "log(2)", "3/4", "sqrt(3)-1", "sqrt(2)-1", "pi-3", "e-2"]
    assert out.entry(3).value_hint == Fraction(3, 4)
    assert out.meta["pool_order"] == (3, 2, 1, 5, 4, 6, 7)


def test_reorder_matches_skeleton_diagonal():
    out = reordered_pool()
    skel = ldi_dprime()
    for k in range(1, 8):
        if k == 3:
            continue
        assert out.entry(k).digit_at(k) == skel.entry(k).digit_at(k)


def test_reorder_identity_when_already_matching():
    skel = ldi_dprime()
    pool = finite_list([skel.entry(n) for n in range(1, 9)], start_index=1, ending=Ending.MAX)
    out = skeleton_reorder(pool, skel, depth=8)
    assert out.meta["pool_order"] == tuple(range(1, 9))


def test_reorder_exhausts_a_poor_pool():
    pool = finite_list([stream_of_rational(Fraction(1, 3), 2)] * 4, start_index=1)
    with pytest.raises(PoolExhausted):
        skeleton_reorder(pool, ldi_dprime(), depth=4)


def test_reorder_missing_pin():
    with pytest.raises(NotFound):
        skeleton_reorder(real_pool(), ldi_dprime(), pinned=[(Fraction(1, 5), 3)])
    with pytest.raises(ValueError):
        skeleton_reorder(real_pool(), ldi(3))
