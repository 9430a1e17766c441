"""Bijective enumerations and their rank/unrank codecs."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Callable, Iterable, Optional, Sequence

from .numeral import (
    Ending,
    WritableNumber,
    check_base,
    digits_to_int,
    int_digits,
)
from .streams import DigitStream, TerminatingStream


class NotFound(LookupError):
    """The numeral is not an entry of the list."""


class InvalidShape(ValueError):
    pass


class OutOfAlphabet(ValueError):
    pass


class OutOfRange(IndexError):
    pass


# -- Digital Inversion --------------------------------------------------------

def di(n: int, base: int = 2) -> WritableNumber:
    """Digital Inversion: the digits of ``n`` reversed behind the radix point.

    >>> str(di(6))
    '0.011'
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    check_base(base)
    if n == 0:
        return WritableNumber._trusted(base, (0,), (0,))
    return WritableNumber._trusted(base, (0,), int_digits(n, base)[::-1])


def di_inverse(prefix: WritableNumber) -> int:
    """Position of a fractional numeral in the DI list.

    The prefix is canonicalized first, so ``0.1100`` ranks like ``0.11``.
    """
    if not prefix.is_fractional:
        raise ValueError(f"{prefix} is not a fractional numeral")
    digits = prefix.fractional_digits
    end = len(digits)
    while end and digits[end - 1] == 0:
        end -= 1
    return digits_to_int(digits[end - 1::-1] if end else (), prefix.base)


def ndigits(n: int, base: int) -> int:
    """Number of significant base-``base`` digits of ``n`` (0 for zero)."""
    count = 0
    while n:
        n //= base
        count += 1
    return count


# -- diagonal traversal of the integer x fraction grid ---------------------------

def pair_unrank(n: int) -> tuple[int, int]:
    """Cell ``(row, col)`` visited at step ``n`` of the anti-diagonal walk.

    Diagonal ``d`` holds the cells with ``row + col == d``, visited by
    increasing row.
    """
    d = (isqrt(8 * n + 1) - 1) // 2
    t = n - d * (d + 1) // 2
    return t, d - t


def pair_rank(row: int, col: int) -> int:
    d = row + col
    return d * (d + 1) // 2 + row


def w2_list(n: int) -> WritableNumber:
    """The ``n``-th binary writable number in diagonal order (0.0, 0.1, 1.0, 0.01, ...)."""
    i, j = pair_unrank(n)
    return WritableNumber(2, int_digits(i, 2), di(j).fractional_digits)


def w2_rank(w: WritableNumber) -> int:
    if w.base != 2:
        raise ValueError("w2_rank expects a base-2 numeral")
    w = w.canonical()
    i = digits_to_int(w.integer_digits, 2)
    j = di_inverse(WritableNumber(2, (0,), w.fractional_digits))
    return pair_rank(i, j)


# -- selectors ------------------------------------------------------------------

def selector_decode(code: int) -> frozenset[int]:
    """Bit positions set in ``code``: position ``i`` selects item ``i`` of a list."""
    if code < 0:
        raise ValueError("selector codes are non-negative")
    out = set()
    i = 0
    while code:
        if code & 1:
            out.add(i)
        code >>= 1
        i += 1
    return frozenset(out)


def selector_encode(items: Iterable[int]) -> int:
    code = 0
    for i in set(items):
        if i < 0:
            raise ValueError("selector positions are non-negative")
        code |= 1 << i
    return code


def select(items: Sequence, code: int) -> list:
    """Apply a selector to a list; positions past the end raise ``IndexError``."""
    return [items[i] for i in sorted(selector_decode(code))]


# -- lexicographic and applicative orders ---------------------------------------

def _render_word(word: Sequence[int], n: int) -> str:
    sep = "" if n <= 9 else " "
    return sep.join(str(c) for c in word)


def _parse_word(s: str | Sequence[int], n: int) -> tuple[int, ...]:
    if isinstance(s, str):
        word = tuple(int(tok) for tok in (s.split() if " " in s else s))
    else:
        word = tuple(s)
    if not word:
        raise OutOfAlphabet("empty string")
    for c in word:
        if not 1 <= c <= n:
            raise OutOfAlphabet(f"symbol {c} outside 1..{n}")
    return word


def applicative_count(n: int, d: int) -> int:
    """Number of nonempty strings of length <= d over n symbols."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    return sum(n**k for k in range(1, d + 1))


def lex_words(n: int, d: int) -> list[tuple[int, ...]]:
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    symbols = range(1, n + 1)
    return [w for k in range(1, d + 1) for w in product(symbols, repeat=k)]


def lex_list(n: int, d: int) -> list[str]:
    """All strings over ``1..n`` of length at most ``d``, by length then lexicographically."""
    return [_render_word(w, n) for w in lex_words(n, d)]


@lru_cache(maxsize=None)
def _applicative_words(k: int) -> tuple[tuple[int, ...], ...]:
    if k == 1:
        return ((1,),)
    middle = [w for w in lex_words(k, k - 1) if k in w]
    full = list(product(range(1, k + 1), repeat=k))
    return _applicative_words(k - 1) + tuple(middle) + tuple(full)


def applicative_words(n: int) -> list[tuple[int, ...]]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_applicative_words(n))


def applicative_list(n: int, d: Optional[int] = None) -> list[str]:
    """Applicative block order for strings of up to ``n`` digits over ``n`` symbols."""
    if d is not None and d != n:
        raise InvalidShape(f"applicative blocks are square; got ({n}, {d})")
    return [_render_word(w, n) for w in applicative_words(n)]


def _count_containing(k: int, length: int) -> int:
    """Strings of ``length`` over ``1..k`` containing ``k``."""
    return k**length - (k - 1) ** length


def _lex_rank_containing(word: tuple[int, ...], k: int) -> int:
    """0-based rank of ``word`` among same-length strings over 1..k that contain k."""
    rank = 0
    seen = False
    length = len(word)
    for i, c in enumerate(word):
        rest = length - i - 1
        for smaller in range(1, c):
            if seen or smaller == k:
                rank += k**rest
            else:
                rank += _count_containing(k, rest)
        seen = seen or c == k
    return rank


def _block_of(word: tuple[int, ...]) -> int:
    return max(len(word), max(word))


def applicative_rank(s, n: int) -> int:
    """1-based position of ``s`` in ``applicative_list(n, n)``."""
    word = _parse_word(s, n)
    if len(word) > n:
        raise OutOfRange(f"length {len(word)} exceeds {n}")
    k = _block_of(word)
    offset = applicative_count(k - 1, k - 1) if k > 1 else 0
    middle_size = sum(_count_containing(k, length) for length in range(1, k))
    if len(word) == k:
        return offset + middle_size + digits_to_int([c - 1 for c in word], k) + 1
    before = sum(_count_containing(k, length) for length in range(1, len(word)))
    return offset + before + _lex_rank_containing(word, k) + 1


def applicative_unrank(i: int, n: int) -> str:
    """Inverse of :func:`applicative_rank`."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = applicative_count(n, n)
    if not 1 <= i <= total:
        raise OutOfRange(f"index {i} outside 1..{total}")
    r = i - 1
    k = 1
    while r >= applicative_count(k, k):
        k += 1
    if k > 1:
        r -= applicative_count(k - 1, k - 1)
    for length in range(1, k):
        size = _count_containing(k, length)
        if r < size:
            return _render_word(_unrank_containing(r, k, length), n)
        r -= size
    digits = int_digits(r, k)
    digits = (0,) * (k - len(digits)) + digits
    return _render_word([d + 1 for d in digits], n)


def _unrank_containing(r: int, k: int, length: int) -> tuple[int, ...]:
    word = []
    seen = False
    for i in range(length):
        rest = length - i - 1
        for c in range(1, k + 1):
            has = seen or c == k
            size = k**rest if has else _count_containing(k, rest)
            if r < size:
                word.append(c)
                seen = has
                break
            r -= size
    return tuple(word)


# -- lists of digit streams -----------------------------------------------------

@dataclass(frozen=True)
class RowDigitBound:
    """Proof metadata: rows ``n >= from_row`` have at most ``digits(n)`` significant
    digits and read ``tail_digit`` past them.

    ``n - digits(n)`` must be non-decreasing in ``n``; the diagonalizer relies
    on that to turn one check into a statement about every later row.
    """

    digits: Callable[[int], int]
    tail_digit: int
    from_row: int = 0


@dataclass(frozen=True)
class ListSpec:
    """An enumerated list of digit streams.

    ``rank_of`` maps a canonical numeral to its index or raises
    :class:`NotFound`.  ``length`` is ``None`` for infinite lists.
    """

    base: int
    entry_at: Callable[[int], DigitStream]
    start_index: int = 0
    rank_of: Optional[Callable[[WritableNumber], int]] = None
    ending: Ending = Ending.ZERO
    description: str = ""
    length: Optional[int] = None
    digit_bound: Optional[RowDigitBound] = None
    label_at: Optional[Callable[[int], str]] = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        check_base(self.base)
        if self.start_index not in (0, 1):
            raise ValueError("start_index must be 0 or 1")

    @property
    def stop(self) -> Optional[int]:
        """One past the last valid index, or ``None`` when infinite."""
        return None if self.length is None else self.start_index + self.length

    def indices(self, count: int) -> range:
        stop = self.start_index + count
        if self.stop is not None:
            stop = min(stop, self.stop)
        return range(self.start_index, stop)

    def entry(self, n: int) -> DigitStream:
        if n < self.start_index or (self.stop is not None and n >= self.stop):
            raise IndexError(f"index {n} outside the list")
        return self.entry_at(n)

    def label(self, n: int) -> str:
        if self.label_at is not None:
            return self.label_at(n)
        return ""

    def diagonal_position(self, n: int) -> int:
        """Fractional digit read from row ``n`` by the diagonal."""
        return n + 1 - self.start_index

    def with_description(self, text: str) -> ListSpec:
        return replace(self, description=text)


def _di_stream(n: int, base: int, ending: Ending) -> TerminatingStream:
    head = int_digits(n, base)[::-1] if n else ()
    if ending is Ending.MAX and head:
        head = head[:-1] + (head[-1] - 1,)
    return TerminatingStream(base, head, ending if head or ending is Ending.ZERO else Ending.ZERO)


def ldi(base: int = 2, ending: Ending = Ending.ZERO, drop_zero: bool = False) -> ListSpec:
    """The DI list of all fractional numerals in ``base``.

    Under :attr:`Ending.MAX` the zero entry, which has no max-digit form, is
    kept as all zeros unless ``drop_zero`` is set, in which case the list
    starts at index 1.
    """
    check_base(base)
    start = 1 if drop_zero else 0

    def entry_at(n: int) -> DigitStream:
        return _di_stream(n, base, ending)

    def rank_of(w: WritableNumber) -> int:
        if w.base != base or not w.is_fractional:
            raise NotFound(f"{w} is not a fractional base-{base} numeral")
        n = di_inverse(w)
        if n < start:
            raise NotFound(f"{w} is not listed")
        return n

    from_row = 1 if ending is Ending.MAX and not drop_zero else start
    name = "ldi" if not drop_zero else "ldi-dropzero"
    suffix = "" if ending is Ending.ZERO else f", {base - 1}-ending"
    return ListSpec(
        base=base,
        entry_at=entry_at,
        start_index=start,
        rank_of=rank_of,
        ending=ending,
        description=f"{name}(base {base}{suffix})",
        digit_bound=RowDigitBound(lambda n: ndigits(n, base), ending.tail_digit(base), from_row),
        meta={"name": name, "base": base, "ending": ending.value},
    )


def ldi_dprime() -> ListSpec:
    """Binary DI list in 1-ending form with zero removed; indices start at 1."""
    spec = ldi(2, Ending.MAX, drop_zero=True)
    return replace(spec, description="ldi-dprime (base 2, 1-ending, zero removed)",
                   meta={**spec.meta, "name": "ldi-dprime"})


def l1() -> ListSpec:
    """The list 0.1, 0.0, 0.01, 0.011, 0.0111, ...: entry n >= 1 is 0.0 then n-1 ones."""

    def entry_at(n: int) -> DigitStream:
        if n == 0:
            return TerminatingStream(2, (1,))
        return TerminatingStream(2, (0,) + (1,) * (n - 1))

    def rank_of(w: WritableNumber) -> int:
        if w.base != 2 or not w.is_fractional:
            raise NotFound(f"{w} is not a fractional binary numeral")
        digits = w.canonical().fractional_digits
        if digits == (1,):
            return 0
        if digits[0] == 0 and all(d == 1 for d in digits[1:]):
            return len(digits)
        raise NotFound(f"{w} is not listed")

    return ListSpec(
        base=2,
        entry_at=entry_at,
        rank_of=rank_of,
        description="l1",
        digit_bound=RowDigitBound(lambda n: n, 0, 1),
        meta={"name": "l1", "base": 2, "ending": "zero"},
    )


def finite_list(entries: Sequence[DigitStream], labels: Sequence[str] = (), start_index: int = 0,
                ending: Ending = Ending.ZERO, description: str = "") -> ListSpec:
    """A finite list with no rank function (an opaque pool of streams)."""
    entries = tuple(entries)
    labels = tuple(labels)
    if not entries:
        raise ValueError("empty list")
    base = entries[0].base
    if any(e.base != base for e in entries):
        raise ValueError("mixed bases in one list")
    return ListSpec(
        base=base,
        entry_at=lambda n: entries[n - start_index],
        start_index=start_index,
        ending=ending,
        description=description,
        length=len(entries),
        label_at=(lambda n: labels[n - start_index]) if labels else None,
    )
