"""Index permutations of lists, and reordering a pool to mimic a skeleton's diagonal."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .enumerations import ListSpec, NotFound, RowDigitBound
from .streams import with_ending


class PoolExhausted(LookupError):
    """No pool entry with the required digit was found within the scan budget."""


@dataclass(frozen=True)
class Shuffle:
    """A bijection on list indices; ``support_bound`` B means ``map(n) == n`` for ``n > B``."""

    map: Callable[[int], int]
    inverse: Callable[[int], int]
    support_bound: Optional[int] = None
    name: str = "shuffle"

    def __call__(self, n: int) -> int:
        return self.map(n)

    def then(self, other: Shuffle) -> Shuffle:
        """Composite ``n -> self(other(n))``; applying it to a list equals applying ``self`` then ``other``."""
        return compose(self, other)


def s0(n: int) -> int:
    """Swap indices 0 and 1, identity elsewhere."""
    if n < 0:
        raise ValueError("indices are non-negative")
    return 1 - n if n <= 1 else n


IDENTITY = Shuffle(lambda n: n, lambda n: n, -1, "identity")
S0 = Shuffle(s0, s0, 1, "s0")


def swap(i: int, j: int) -> Shuffle:
    if i < 0 or j < 0:
        raise ValueError("indices are non-negative")

    def fn(n: int) -> int:
        if n == i:
            return j
        if n == j:
            return i
        return n

    return Shuffle(fn, fn, max(i, j), f"swap:{i},{j}")


def compose(*shuffles: Shuffle) -> Shuffle:
    """``compose(a, b)(n) == a(b(n))``."""
    if not shuffles:
        return IDENTITY
    maps = [s.map for s in shuffles]
    inverses = [s.inverse for s in reversed(shuffles)]

    def fwd(n: int) -> int:
        for f in reversed(maps):
            n = f(n)
        return n

    def back(n: int) -> int:
        for f in reversed(inverses):
            n = f(n)
        return n

    bounds = [s.support_bound for s in shuffles]
    bound = None if any(b is None for b in bounds) else max(bounds)
    name = "compose:" + "+".join(s.name for s in shuffles)
    return Shuffle(fwd, back, bound, name)


def parse_shuffle(text: str) -> Shuffle:
    """Parse ``s0``, ``identity``, ``swap:i,j`` or ``compose:a+b+...``."""
    text = text.strip()
    if text == "s0":
        return S0
    if text in ("identity", "id"):
        return IDENTITY
    if text.startswith("swap:"):
        i, j = (int(v) for v in text[5:].split(","))
        return swap(i, j)
    if text.startswith("compose:"):
        return compose(*(parse_shuffle(part) for part in text[8:].split("+")))
    raise ValueError(f"unknown shuffle {text!r}")


def apply_shuffle(s: Shuffle, lst: ListSpec) -> ListSpec:
    """``entry'(n) = entry(s(n))``; the rank function becomes ``s.inverse . rank``."""
    entry_at = lst.entry_at
    rank_of = lst.rank_of

    def new_entry(n: int):
        return entry_at(s.map(n))

    new_rank = None
    if rank_of is not None:
        def new_rank(w):
            return s.inverse(rank_of(w))

    bound = lst.digit_bound
    if bound is not None:
        if s.support_bound is None:
            bound = None
        else:
            bound = RowDigitBound(bound.digits, bound.tail_digit,
                                  max(bound.from_row, s.support_bound + 1))
    shuffles = lst.meta.get("shuffles", ()) + (s.name,)
    return replace(
        lst,
        entry_at=new_entry,
        rank_of=new_rank,
        digit_bound=bound,
        description=f"{s.name} * {lst.description}",
        label_at=(lambda n: lst.label_at(s.map(n))) if lst.label_at else None,
        meta={**lst.meta, "shuffles": shuffles},
    )


def skeleton_reorder(
    pool: ListSpec,
    skeleton: ListSpec,
    pinned: Sequence[tuple[Fraction, int]] = (),
    depth: int = 7,
    scan_budget: Optional[int] = None,
) -> ListSpec:
    """Reorder ``pool`` so its diagonal digits agree with ``skeleton``'s.

    Pinned values are moved to their lines first (shifting the lines in
    between).  Then, row by row up to ``depth``, a row whose diagonal digit
    differs from the skeleton's is swapped with the first later unpinned row
    whose digit matches.  Digits are read under the skeleton's ending.
    Returns the reordered prefix of ``depth`` rows as a finite list.
    """
    if pool.base != skeleton.base:
        raise ValueError("pool and skeleton bases differ")
    start = skeleton.start_index
    if scan_budget is None:
        scan_budget = pool.length if pool.length is not None else 64 * max(depth, 1)
    # lines[i] is the pool index placed at output line start + i
    lines = list(pool.indices(scan_budget))
    last = start + depth - 1

    def entry(pool_index: int):
        return with_ending(pool.entry(pool_index), skeleton.ending)

    pinned_lines = set()
    for value, line in pinned:
        value = Fraction(value)
        for pos, idx in enumerate(lines):
            if pool.entry(idx).value_hint == value:
                break
        else:
            raise NotFound(f"pinned value {value} not in the first {scan_budget} pool entries")
        if not start <= line <= last:
            raise ValueError(f"pinned line {line} outside {start}..{last}")
        lines.insert(line - start, lines.pop(pos))
        pinned_lines.add(line)

    for k in range(start, last + 1):
        if k in pinned_lines:
            continue
        pos = skeleton.diagonal_position(k)
        want = skeleton.entry(k).digit_at(pos)
        if entry(lines[k - start]).digit_at(pos) == want:
            continue
        for m in range(k - start + 1, len(lines)):
            if m + start in pinned_lines:
                continue
            if entry(lines[m]).digit_at(pos) == want:
                lines[k - start], lines[m] = lines[m], lines[k - start]
                break
        else:
            raise PoolExhausted(f"no pool entry has digit {want} at position {pos} (row {k})")

    chosen = lines[:depth]
    if len(chosen) < depth:
        raise PoolExhausted(f"pool has only {len(chosen)} entries, {depth} requested")
    entries = {start + i: entry(idx) for i, idx in enumerate(chosen)}
    labels = {start + i: pool.label(idx) for i, idx in enumerate(chosen)}
    return ListSpec(
        base=pool.base,
        entry_at=entries.__getitem__,
        start_index=start,
        ending=skeleton.ending,
        description=f"{pool.description} reordered to the skeleton of {skeleton.description}",
        length=depth,
        label_at=labels.__getitem__,
        meta={"name": "reordered", "pool_order": tuple(chosen)},
    )
