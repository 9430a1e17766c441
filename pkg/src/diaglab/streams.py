"""Possibly infinite fractional digit sequences addressed by position.

Positions are 1-based: ``digit_at(1)`` is the first digit after the radix
point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .numeral import (
    Ending,
    NoSuchRepresentation,
    WritableNumber,
    check_base,
    is_writable,
    rational,
    render,
    value_of,
)


class TailKind(enum.Enum):
    ZERO = "eventually-zero"
    MAX = "eventually-max"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Tail:
    """Eventual behaviour of a stream; ``start`` is the first position of the constant run."""

    kind: TailKind
    start: Optional[int] = None

    @classmethod
    def zero(cls, start: int) -> Tail:
        return cls(TailKind.ZERO, start)

    @classmethod
    def max(cls, start: int) -> Tail:
        return cls(TailKind.MAX, start)

    def digit(self, base: int) -> Optional[int]:
        if self.kind is TailKind.ZERO:
            return 0
        if self.kind is TailKind.MAX:
            return base - 1
        return None


UNKNOWN_TAIL = Tail(TailKind.UNKNOWN)


class DigitStream:
    """Base class: subclasses implement ``_digit(pos)`` for ``pos >= 1``."""

    base: int
    tail: Tail = UNKNOWN_TAIL
    value_hint: Optional[Fraction] = None

    def _digit(self, pos: int) -> int:
        raise NotImplementedError

    def digit_at(self, pos: int) -> int:
        if pos < 1:
            raise IndexError(f"digit positions start at 1, got {pos}")
        return self._digit(pos)

    def digits(self, count: int, start: int = 1) -> tuple[int, ...]:
        return tuple(self.digit_at(p) for p in range(start, start + count))

    def prefix(self, count: int) -> WritableNumber:
        """The first ``count`` fractional digits as a numeral (``0.0`` when ``count`` is 0)."""
        return WritableNumber(self.base, (0,), self.digits(count) if count else (0,))

    def text(self, count: int, symbols: str = "0123456789abcdefghijklmnopqrstuvwxyz") -> str:
        return "0." + "".join(symbols[d] for d in self.digits(count)) + "..."


class TerminatingStream(DigitStream):
    """Finitely many leading digits followed by a constant trivial tail (0 or base-1)."""

    def __init__(self, base: int, head, ending: Ending = Ending.ZERO):
        self.base = check_base(base)
        self.head = tuple(head)
        self.ending = ending
        self._tail_digit = ending.tail_digit(base)
        kind = TailKind.ZERO if ending is Ending.ZERO else TailKind.MAX
        start = len(self.head) + 1
        while start > 1 and self.head[start - 2] == self._tail_digit:
            start -= 1
        self.tail = Tail(kind, start)
        n = 0
        for d in self.head:
            n = n * base + d
        value = Fraction(n, base ** len(self.head))
        if ending is Ending.MAX:
            value += Fraction(1, base ** len(self.head))
        self.value_hint = value

    def _digit(self, pos):
        if pos <= len(self.head):
            return self.head[pos - 1]
        return self._tail_digit

    def __repr__(self):
        return f"TerminatingStream(base={self.base}, head={self.head!r}, ending={self.ending.name})"


class RationalStream(DigitStream):
    """Expansion of a rational in [0, 1) found by long division.

    The pre-period and the repeating block are located by remainder-cycle
    detection, so every digit query afterwards is O(1).
    """

    def __init__(self, x, base: int):
        x = rational(x)
        if x >= 1:
            raise ValueError(f"expected a value in [0, 1), got {x}")
        self.base = check_base(base)
        self.value_hint = x
        num, den = x.numerator, x.denominator
        seen: dict[int, int] = {}
        digits = []
        r = num
        while r not in seen:
            seen[r] = len(digits)
            d, r = divmod(r * base, den)
            digits.append(d)
        start = seen[r]
        self.preperiod = tuple(digits[:start])
        self.period = tuple(digits[start:])
        if set(self.period) == {0}:
            self.tail = _trimmed_tail(TailKind.ZERO, self.preperiod, 0)
        elif set(self.period) == {base - 1}:
            self.tail = _trimmed_tail(TailKind.MAX, self.preperiod, base - 1)
        else:
            self.tail = UNKNOWN_TAIL

    def _digit(self, pos):
        i = pos - 1
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def __repr__(self):
        return f"RationalStream({self.value_hint}, base={self.base})"


def _trimmed_tail(kind: TailKind, preperiod, digit: int) -> Tail:
    start = len(preperiod) + 1
    while start > 1 and preperiod[start - 2] == digit:
        start -= 1
    return Tail(kind, start)


class FunctionStream(DigitStream):
    """Wraps a deterministic ``pos -> digit`` callable."""

    def __init__(self, base: int, digit_fn: Callable[[int], int], tail: Tail = UNKNOWN_TAIL,
                 value_hint=None):
        self.base = check_base(base)
        self._fn = digit_fn
        self.tail = tail
        self.value_hint = None if value_hint is None else rational(value_hint)

    def _digit(self, pos):
        return self._fn(pos)


def stream_of_writable(w: WritableNumber) -> TerminatingStream:
    """Lift the fractional part of a finite numeral to a 0-ending stream."""
    if not w.is_fractional:
        raise ValueError(f"{w} has a non-zero integer part")
    head = w.canonical().fractional_digits
    if head == (0,):
        head = ()
    return TerminatingStream(w.base, head, Ending.ZERO)


def convert_ending(w: WritableNumber, target: Ending) -> TerminatingStream:
    """Re-express a fractional numeral with the requested eventual tail.

    ``0.1`` in base 2 becomes ``0.0111...`` under :attr:`Ending.MAX`.  Zero
    has no max-digit form and raises :class:`NoSuchRepresentation`.
    """
    zero_form = stream_of_writable(w)
    if target is Ending.ZERO:
        return zero_form
    head = list(zero_form.head)
    if not head:
        raise NoSuchRepresentation("zero has no representation ending in repeated max digits")
    head[-1] -= 1
    return TerminatingStream(w.base, head, Ending.MAX)


def stream_of_rational(x, base: int, ending: Ending = Ending.ZERO) -> DigitStream:
    """Exact digit stream of ``x`` in [0, 1).

    With ``ending=Ending.MAX`` a writable non-zero value is returned in its
    max-digit-ending form (``1/10`` -> ``0.0999...``).
    """
    x = rational(x)
    if ending is Ending.MAX and x > 0 and is_writable(x, base):
        return convert_ending(render(x, base), Ending.MAX)
    return RationalStream(x, base)


def with_ending(s: DigitStream, ending: Ending) -> DigitStream:
    """Return ``s`` re-expressed under ``ending`` when it has a trivial tail and a non-zero value."""
    if s.tail.kind is TailKind.UNKNOWN or s.value_hint is None or s.value_hint == 0:
        return s
    current = Ending.ZERO if s.tail.kind is TailKind.ZERO else Ending.MAX
    if current is ending:
        return s
    return convert_ending(render(s.value_hint, s.base), ending)


def truncate(s: DigitStream, k: int) -> WritableNumber:
    """Row-``k`` truncation: the first ``k + 1`` fractional digits."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return s.prefix(k + 1)


def approximate(s: DigitStream, k: int) -> WritableNumber:
    """A finite numeral within ``base**-k`` of the stream's limit."""
    return truncate(s, k)


def limit_of_prefix(prefix: WritableNumber, tail_digit: int) -> Fraction:
    """Value of ``prefix`` followed by ``tail_digit`` repeated forever."""
    b = prefix.base
    q = len(prefix.fractional_digits)
    return value_of(prefix) + Fraction(tail_digit, (b - 1) * b**q)
