"""Guaranteed digits of a few irrational constants via rational enclosures.

Every constant has two independent enclosure routines.  Both return a pair
``(lo, hi)`` of Fractions with ``lo <= c <= hi`` and ``hi - lo <= 2**-bits``
(up to a few units of rounding slack).  No floating point is involved.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction
from math import isqrt
from typing import Callable

from .numeral import check_base
from .streams import UNKNOWN_TAIL, DigitStream

Enclosure = Callable[[int], "tuple[Fraction, Fraction]"]

START_BITS = 32
MAX_ROUNDS = 20
GUARD_BITS = 16


class RefinementBudgetExceeded(RuntimeError):
    """The enclosure could not separate a digit within the round cap."""


class Constant(enum.Enum):
    SQRT2_MINUS_1 = "sqrt2-1"
    SQRT3_MINUS_1 = "sqrt3-1"
    LOG2 = "log2"
    PI_MINUS_3 = "pi-3"
    E_MINUS_2 = "e-2"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Constant.SQRT2_MINUS_1: "sqrt(2)-1",
    Constant.SQRT3_MINUS_1: "sqrt(3)-1",
    Constant.LOG2: "log(2)",
    Constant.PI_MINUS_3: "pi-3",
    Constant.E_MINUS_2: "e-2",
}


# -- primary routines: integer fixed point with explicit error accounting ----

def _sqrt_isqrt(n: int, bits: int):
    root = isqrt(n << (2 * bits))
    return Fraction(root, 1 << bits), Fraction(root + 1, 1 << bits)


def _log2_series(bits: int):
    # log 2 = sum_{j>=1} 1 / (j 2^j); floor error < 1 unit per term,
    # tail after N terms < 1 / ((N+1) 2^N) <= 1 unit once N >= P.
    p = bits + GUARD_BITS
    one = 1 << p
    total = 0
    n_terms = p
    for j in range(1, n_terms + 1):
        total += one // (j << j)
    return Fraction(total, one), Fraction(total + n_terms + 1, one)


def _atan_inv_fixed(x: int, one: int):
    """Bounds (in units of 1/one) on atan(1/x) by the alternating Gregory series."""
    x2 = x * x
    power = one // x
    total = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j % 2 else term
        power //= x2
        j += 1
    # j floored terms (error < 1 each) and a dropped remainder smaller than 1 unit
    return total - j - 1, total + j + 1


def _pi_machin(bits: int):
    p = bits + GUARD_BITS
    one = 1 << p
    a_lo, a_hi = _atan_inv_fixed(5, one)
    b_lo, b_hi = _atan_inv_fixed(239, one)
    lo = 16 * a_lo - 4 * b_hi - 3 * one
    hi = 16 * a_hi - 4 * b_lo - 3 * one
    return Fraction(lo, one), Fraction(hi, one)


def _e_factorial(bits: int):
    # floor(floor(a)/k) == floor(a/k), so term_k is exactly floor(2^P / k!)
    p = bits + GUARD_BITS
    one = 1 << p
    term = one // 2
    total = 0
    k = 2
    while term:
        total += term
        k += 1
        term //= k
    # k-2 floored terms, remainder below 2 units
    return Fraction(total, one), Fraction(total + k + 2, one)


# -- secondary routines: exact rational recurrences -----------------------

def _sqrt_heron(n: int, bits: int):
    eps = Fraction(1, 1 << bits)
    hi = Fraction(n)  # n >= sqrt(n) for n >= 1
    lo = Fraction(n) / hi
    while hi - lo > eps:
        hi = (hi + Fraction(n) / hi) / 2
        lo = Fraction(n) / hi
    return lo, hi


def _log2_atanh(bits: int):
    # log 2 = 2 atanh(1/3) = 2 sum 1 / ((2j+1) 3^(2j+1)); remainder < 9/8 of next term
    eps = Fraction(1, 1 << bits)
    total = Fraction(0)
    j = 0
    while True:
        term = Fraction(2, (2 * j + 1) * 3 ** (2 * j + 1))
        total += term
        j += 1
        bound = Fraction(2, (2 * j + 1) * 3 ** (2 * j + 1)) * Fraction(9, 8)
        if bound < eps:
            return total, total + bound


def _pi_bbp(bits: int):
    eps = Fraction(1, 1 << bits)
    total = Fraction(0)
    k = 0
    while True:
        total += Fraction(1, 16**k) * (
            Fraction(4, 8 * k + 1) - Fraction(2, 8 * k + 4)
            - Fraction(1, 8 * k + 5) - Fraction(1, 8 * k + 6)
        )
        k += 1
        # each later term is below 4 / ((8k+1) 16^k); geometric remainder factor 16/15
        bound = Fraction(4 * 16, (8 * k + 1) * 16**k * 15)
        if bound < eps:
            return total - 3, total - 3 + bound


def _e_continued_fraction(bits: int):
    # e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]; consecutive convergents bracket e
    eps = Fraction(1, 1 << bits)

    def partial_quotients():
        yield 2
        k = 1
        while True:
            yield 1
            yield 2 * k
            yield 1
            k += 1

    h_prev, h = 0, 1
    k_prev, k = 1, 0
    prev = None
    for a in partial_quotients():
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        cur = Fraction(h, k)
        if prev is not None and abs(cur - prev) < eps:
            lo, hi = min(prev, cur), max(prev, cur)
            return lo - 2, hi - 2
        prev = cur
    raise AssertionError("unreachable")


PRIMARY: dict[Constant, Enclosure] = {
    Constant.SQRT2_MINUS_1: lambda bits: tuple(v - 1 for v in _sqrt_isqrt(2, bits)),
    Constant.SQRT3_MINUS_1: lambda bits: tuple(v - 1 for v in _sqrt_isqrt(3, bits)),
    Constant.LOG2: _log2_series,
    Constant.PI_MINUS_3: _pi_machin,
    Constant.E_MINUS_2: _e_factorial,
}

SECONDARY: dict[Constant, Enclosure] = {
    Constant.SQRT2_MINUS_1: lambda bits: tuple(v - 1 for v in _sqrt_heron(2, bits)),
    Constant.SQRT3_MINUS_1: lambda bits: tuple(v - 1 for v in _sqrt_heron(3, bits)),
    Constant.LOG2: _log2_atanh,
    Constant.PI_MINUS_3: _pi_bbp,
    Constant.E_MINUS_2: _e_continued_fraction,
}


class ConstantStream(DigitStream):
    """Digits of a constant, refined by doubling the enclosure precision.

    Digit ``k`` is emitted only once ``floor(lo * b**k) == floor(hi * b**k)``.
    The best enclosure so far is cached; the cache is guarded by a lock so
    concurrent readers see consistent digits.
    """

    tail = UNKNOWN_TAIL
    value_hint = None

    def __init__(self, constant: Constant, base: int, method: str = "primary"):
        self.constant = constant
        self.base = check_base(base)
        self.method = method
        table = PRIMARY if method == "primary" else SECONDARY
        self._enclose = table[constant]
        self._lock = threading.Lock()
        self._bits = 0
        self._bounds: tuple[Fraction, Fraction] | None = None

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        return self._enclose(bits)

    def _digit(self, pos):
        scale = self.base**pos
        with self._lock:
            bits = self._bits or START_BITS
            bounds = self._bounds
            for _ in range(MAX_ROUNDS):
                if bounds is None or self._bits < bits:
                    bounds = self._enclose(bits)
                    self._bits, self._bounds = bits, bounds
                lo, hi = bounds
                a = lo.numerator * scale // lo.denominator
                if a == hi.numerator * scale // hi.denominator:
                    return a % self.base
                bits *= 2
        raise RefinementBudgetExceeded(
            f"{self.constant.value}: digit {pos} in base {self.base} unresolved after {MAX_ROUNDS} rounds"
        )

    def __repr__(self):
        return f"ConstantStream({self.constant.value}, base={self.base}, method={self.method!r})"


def stream_of_constant(c: Constant | str, base: int, method: str = "primary") -> ConstantStream:
    if method not in ("primary", "secondary"):
        raise ValueError(f"unknown method {method!r}")
    return ConstantStream(Constant(c), base, method)
