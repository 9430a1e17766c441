"""Finite positional numerals in an arbitrary base and their exact values."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd

DEFAULT_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
_SYMBOL_VALUE = {c: i for i, c in enumerate(DEFAULT_SYMBOLS)}
_FORMAT_CODES = {2: "b", 8: "o", 16: "x"}


class NotWritable(ValueError):
    """The rational has no finite expansion in the requested base."""


class NoSuchRepresentation(ValueError):
    """The requested ending convention does not exist for this value."""


class Ending(enum.Enum):
    """How a terminating expansion continues after its last significant digit."""

    ZERO = "zero"
    MAX = "max"

    def tail_digit(self, base: int) -> int:
        return 0 if self is Ending.ZERO else base - 1


def check_base(base: int) -> int:
    if not isinstance(base, int) or isinstance(base, bool) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")
    return base


def rational(x) -> Fraction:
    """Coerce ``x`` to a non-negative ``Fraction``."""
    q = Fraction(x)
    if q < 0:
        raise ValueError(f"negative values are not supported: {q}")
    return q


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return rational(Fraction(text.strip()))


def int_digits(n: int, base: int) -> tuple[int, ...]:
    """Digits of ``n`` in ``base``, most significant first; ``(0,)`` for zero."""
    if n < 0:
        raise ValueError("negative integers have no digit string here")
    if n == 0:
        return (0,)
    if base == 10 and n.bit_length() < 14000:
        return tuple(map(_SYMBOL_VALUE.__getitem__, str(n)))
    if base in _FORMAT_CODES:
        return tuple(map(_SYMBOL_VALUE.__getitem__, format(n, _FORMAT_CODES[base])))
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    return tuple(reversed(out))


_CHUNK = 1000


def digits_to_int(digits, base: int) -> int:
    digits = list(digits)
    if base > 36 or len(digits) <= 32:
        n = 0
        for d in digits:
            n = n * base + d
        return n
    text = "".join(DEFAULT_SYMBOLS[d] for d in digits)
    if base & (base - 1) == 0:
        return int(text, base)
    # str->int is capped at 4300 digits for non power-of-two bases
    n = 0
    scale = base**_CHUNK
    head = len(text) % _CHUNK
    if head:
        n = int(text[:head], base)
    for i in range(head, len(text), _CHUNK):
        n = n * scale + int(text[i:i + _CHUNK], base)
    return n


@lru_cache(maxsize=64)
def _digit_set(base: int) -> frozenset:
    return frozenset(range(base))


@dataclass(frozen=True)
class WritableNumber:
    """A finite digit string ``w_p...w_0 . w_-1...w_-q`` in ``base``.

    Leading integer zeros are dropped on construction.  Trailing fractional
    zeros are kept, since truncated prefixes such as ``0.1100`` are
    meaningful; use :meth:`canonical` to strip them.
    """

    base: int
    integer_digits: tuple[int, ...] = (0,)
    fractional_digits: tuple[int, ...] = (0,)

    def __post_init__(self):
        check_base(self.base)
        ip = tuple(self.integer_digits)
        fp = tuple(self.fractional_digits)
        bad = set(ip).union(fp) - _digit_set(self.base)
        if bad:
            raise ValueError(f"digit {bad.pop()!r} out of range for base {self.base}")
        if len(ip) > 1 and ip[0] == 0:
            i = 0
            while i < len(ip) - 1 and ip[i] == 0:
                i += 1
            ip = ip[i:]
        object.__setattr__(self, "integer_digits", ip or (0,))
        object.__setattr__(self, "fractional_digits", fp or (0,))

    @classmethod
    def _trusted(cls, base: int, integer_digits: tuple, fractional_digits: tuple) -> WritableNumber:
        # caller guarantees valid, normalized digit tuples
        w = object.__new__(cls)
        object.__setattr__(w, "base", base)
        object.__setattr__(w, "integer_digits", integer_digits)
        object.__setattr__(w, "fractional_digits", fractional_digits)
        return w

    @classmethod
    def parse(cls, text: str, base: int = 10, symbols: str = DEFAULT_SYMBOLS) -> WritableNumber:
        check_base(base)
        if base > len(symbols):
            raise ValueError(f"symbol table too short for base {base}")
        text = text.strip()
        head, dot, tail = text.partition(".")
        if not head and not tail:
            raise ValueError(f"empty numeral {text!r}")
        lookup = {c: i for i, c in enumerate(symbols[:base])}
        if symbols is DEFAULT_SYMBOLS:
            lookup.update({c.upper(): i for c, i in list(lookup.items())})
        try:
            ip = tuple(lookup[c] for c in head) or (0,)
            fp = tuple(lookup[c] for c in tail) or (0,)
        except KeyError as exc:
            raise ValueError(f"invalid digit {exc.args[0]!r} in {text!r} for base {base}") from None
        return cls(base, ip, fp)

    def canonical(self) -> WritableNumber:
        fp = self.fractional_digits
        end = len(fp)
        while end > 1 and fp[end - 1] == 0:
            end -= 1
        if end == len(fp):
            return self
        return WritableNumber(self.base, self.integer_digits, fp[:end])

    @property
    def is_canonical(self) -> bool:
        return self == self.canonical()

    @property
    def is_fractional(self) -> bool:
        """True when the integer part is zero."""
        return self.integer_digits == (0,)

    def render(self, symbols: str = DEFAULT_SYMBOLS) -> str:
        if self.base > len(symbols):
            raise ValueError(f"symbol table too short for base {self.base}")
        ip = "".join(symbols[d] for d in self.integer_digits)
        fp = "".join(symbols[d] for d in self.fractional_digits)
        return f"{ip}.{fp}"

    def __str__(self) -> str:
        return self.render()


def value_of(w: WritableNumber) -> Fraction:
    """Exact value of ``w``: the sum of its digits weighted by powers of the base."""
    b = w.base
    q = len(w.fractional_digits)
    numerator = digits_to_int(w.integer_digits + w.fractional_digits, b)
    return Fraction(numerator, b**q)


def _strip_base_factors(den: int, base: int) -> int:
    g = gcd(den, base)
    while g > 1:
        while den % g == 0:
            den //= g
        g = gcd(den, base)
    return den


def is_writable(x, base: int) -> bool:
    """Whether ``x`` has a finite expansion in ``base``.

    True exactly when every prime factor of the reduced denominator divides
    the base.
    """
    x = rational(x)
    check_base(base)
    return _strip_base_factors(x.denominator, base) == 1


def render(x, base: int) -> WritableNumber:
    """Canonical finite numeral for ``x`` in ``base``; raises :class:`NotWritable` otherwise."""
    x = rational(x)
    check_base(base)
    if not is_writable(x, base):
        raise NotWritable(f"{format_rational(x)} has no finite expansion in base {base}")
    den = x.denominator
    q, scale = 0, 1
    while scale % den:
        scale *= base
        q += 1
    n = x.numerator * (scale // den)
    ipart, fpart = divmod(n, scale)
    if q == 0:
        frac = (0,)
    else:
        frac = int_digits(fpart, base) if fpart else ()
        frac = (0,) * (q - len(frac)) + frac
    return WritableNumber(base, int_digits(ipart, base), frac).canonical()


def split(w: WritableNumber) -> tuple[WritableNumber, WritableNumber]:
    """Split ``w`` into its integer part and its fractional part."""
    return (
        WritableNumber(w.base, w.integer_digits, (0,)),
        WritableNumber(w.base, (0,), w.fractional_digits),
    )
