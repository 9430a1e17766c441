"""The diagonal method as a pipeline: list in, antidiagonal digits and verdicts out."""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .enumerations import ListSpec, NotFound
from .numeral import (
    NotWritable,
    WritableNumber,
    format_rational,
    render,
    value_of,
)
from .streams import limit_of_prefix


class RuleBaseMismatch(ValueError):
    pass


class RuleKind(enum.Enum):
    BINARY_FLIP = "flip"
    ADD_ONE_MOD_10 = "hawking"
    SUB_ONE_MOD_10 = "hofstadter"
    PENROSE_TWO_ONE = "penrose"
    DUNHAM_RANDOM = "dunham"


_RULE_TEXT = {
    RuleKind.BINARY_FLIP: "1-x",
    RuleKind.ADD_ONE_MOD_10: "(x+1) mod 10",
    RuleKind.SUB_ONE_MOD_10: "(x-1) mod 10",
    RuleKind.PENROSE_TWO_ONE: "(x=2)? 1 : 2",
    RuleKind.DUNHAM_RANDOM: "rand(1..8) != x",
}


@dataclass(frozen=True)
class ReplacementRule:
    """How the antidiagonal digit is chosen from the diagonal digit.

    Every rule returns a digit different from its input.  The Dunham rule
    draws from ``{1..8} - {x}`` with a generator seeded per run, so a run is
    reproducible; it exercises the rule's shape, not real randomness.
    """

    kind: RuleKind
    seed: Optional[int] = None

    @classmethod
    def parse(cls, name: str, seed: Optional[int] = None) -> ReplacementRule:
        aliases = {"binary-flip": "flip", "add1": "hawking", "sub1": "hofstadter", "random": "dunham"}
        kind = RuleKind(aliases.get(name, name))
        if kind is RuleKind.DUNHAM_RANDOM and seed is None:
            seed = 0
        return cls(kind, seed if kind is RuleKind.DUNHAM_RANDOM else None)

    @property
    def base(self) -> int:
        return 2 if self.kind is RuleKind.BINARY_FLIP else 10

    @property
    def deterministic(self) -> bool:
        return self.kind is not RuleKind.DUNHAM_RANDOM

    @property
    def text(self) -> str:
        return _RULE_TEXT[self.kind]

    def new_rng(self) -> Optional[random.Random]:
        return random.Random(self.seed) if self.kind is RuleKind.DUNHAM_RANDOM else None

    def replace(self, x: int, rng: Optional[random.Random] = None) -> int:
        k = self.kind
        if k is RuleKind.BINARY_FLIP:
            return 1 - x
        if k is RuleKind.ADD_ONE_MOD_10:
            return (x + 1) % 10
        if k is RuleKind.SUB_ONE_MOD_10:
            return (x - 1) % 10
        if k is RuleKind.PENROSE_TWO_ONE:
            return 1 if x == 2 else 2
        if rng is None:
            raise ValueError("the random rule needs the run's generator")
        return rng.choice([d for d in range(1, 9) if d != x])

    def image(self) -> frozenset[int]:
        """Every digit the rule can output."""
        if self.kind is RuleKind.DUNHAM_RANDOM:
            return frozenset(range(1, 9))
        return frozenset(self.replace(x) for x in range(self.base))

    def can_be_forced(self) -> bool:
        """Whether some input yields a trivial tail digit (0 or base-1)."""
        return bool(self.image() & {0, self.base - 1})


@dataclass(frozen=True)
class DMConfig:
    list: ListSpec
    rule: ReplacementRule
    depth: int

    def __post_init__(self):
        if self.rule.base != self.list.base:
            raise RuleBaseMismatch(
                f"rule {self.rule.kind.value} works in base {self.rule.base}, list is base {self.list.base}"
            )
        if self.depth < 0:
            raise ValueError("depth must be non-negative")

    @property
    def rows(self) -> range:
        return self.list.indices(self.depth)

    def to_dict(self) -> dict:
        out = {
            "list": self.list.description,
            "base": self.list.base,
            "ending": self.list.ending.value,
            "start_index": self.list.start_index,
            "rule": self.rule.kind.value,
            "depth": self.depth,
        }
        if self.rule.seed is not None:
            out["seed"] = self.rule.seed
        shuffles = self.list.meta.get("shuffles")
        if shuffles:
            out["shuffle"] = "+".join(shuffles)
        return out


class TailVerdictKind(enum.Enum):
    CONSTANT = "constant-tail"
    NONE = "no-tail-within-depth"


@dataclass(frozen=True)
class TailVerdict:
    kind: TailVerdictKind
    digit: Optional[int] = None
    start: Optional[int] = None

    def to_dict(self) -> Optional[dict]:
        if self.kind is TailVerdictKind.NONE:
            return None
        return {"digit": self.digit, "from": self.start}


NO_TAIL = TailVerdict(TailVerdictKind.NONE)


class MembershipKind(enum.Enum):
    IN_LIST = "in-list"
    NOT_IN_PREFIX = "not-in-list-prefix"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Membership:
    kind: MembershipKind
    position: Optional[int] = None

    def to_json(self):
        if self.kind is MembershipKind.IN_LIST:
            return {"in_list": self.position}
        return self.kind.value


@dataclass(frozen=True)
class TraceRow:
    n: int
    prefix: WritableNumber
    position: Optional[int]


@dataclass
class DMReport:
    """Outcome of a run.

    ``digits[i]`` is antidiagonal digit ``i + 1``.  ``eventual_digit`` is the
    digit the antidiagonal provably repeats past ``tail_from`` even when it is
    not 0 or base-1 (such a limit is rational but has no finite numeral);
    ``tail`` only reports the trivial tails that yield a finite numeral.
    """

    config: DMConfig
    digits: tuple[int, ...]
    diagonal: tuple[int, ...]
    tail: TailVerdict
    limit: Optional[Fraction]
    membership: Membership
    eventual_digit: Optional[int] = None
    tail_from: Optional[int] = None
    _positions: dict = field(default_factory=dict, repr=False)

    @property
    def rows(self) -> range:
        return self.config.rows

    def prefix(self, n: int) -> WritableNumber:
        """Partial antidiagonal after row ``n``."""
        count = self.config.list.diagonal_position(n)
        return WritableNumber(self.config.list.base, (0,), self.digits[:count] or (0,))

    def position(self, n: int) -> Optional[int]:
        if n not in self._positions:
            self._positions[n] = position_of_prefix_or_none(self.config.list, self.prefix(n))
        return self._positions[n]

    def trace(self) -> Iterator[TraceRow]:
        for n in self.rows:
            yield TraceRow(n, self.prefix(n), self.position(n))

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "trace": [
                {"n": row.n, "prefix": str(row.prefix), "position": row.position}
                for row in self.trace()
            ],
            "tail": self.tail.to_dict(),
            "limit": None if self.limit is None else format_rational(self.limit),
            "membership": self.membership.to_json(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _check_rule(cfg: DMConfig) -> None:
    if cfg.rule.base != cfg.list.base:
        raise RuleBaseMismatch("rule and list bases differ")


def antidiagonal_digits(cfg: DMConfig) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Diagonal and antidiagonal digits for every row of the run, in row order."""
    _check_rule(cfg)
    lst = cfg.list
    rng = cfg.rule.new_rng()
    diag = []
    anti = []
    for n in cfg.rows:
        d = lst.entry(n).digit_at(lst.diagonal_position(n))
        diag.append(d)
        anti.append(cfg.rule.replace(d, rng))
    return tuple(diag), tuple(anti)


def antidiagonal_prefix(cfg: DMConfig, n: int) -> WritableNumber:
    """Partial antidiagonal through row ``n``: digit i comes from row i's i-th digit."""
    _check_rule(cfg)
    lst = cfg.list
    if n < lst.start_index:
        raise ValueError(f"row {n} precedes the list start {lst.start_index}")
    if n >= lst.start_index + cfg.depth:
        raise ValueError(f"row {n} beyond depth {cfg.depth}")
    sub = DMConfig(lst, cfg.rule, n - lst.start_index + 1)
    _, anti = antidiagonal_digits(sub)
    return WritableNumber(lst.base, (0,), anti)


def position_of_prefix(lst: ListSpec, prefix: WritableNumber) -> int:
    """Index of the entry whose canonical numeral equals the canonical prefix."""
    if lst.rank_of is None:
        raise ValueError(f"{lst.description} has no rank function")
    return lst.rank_of(prefix.canonical())


def position_of_prefix_or_none(lst: ListSpec, prefix: WritableNumber) -> Optional[int]:
    if lst.rank_of is None:
        return None
    try:
        return position_of_prefix(lst, prefix)
    except NotFound:
        return None


def _proof_row(lst: ListSpec, limit: int) -> Optional[int]:
    """First row N (below ``limit``) from which every row provably reads its tail digit.

    A row past its significant digits reads the tail digit; since
    ``position(n) - digits(n)`` never decreases, the first row where the
    position exceeds the digit bound settles every later row too.
    """
    bound = lst.digit_bound
    if bound is None or lst.length is not None:
        return None
    for n in range(max(bound.from_row, lst.start_index), limit):
        if lst.diagonal_position(n) > bound.digits(n):
            return n
    return None


def detect_tail(cfg: DMConfig) -> DMReport:
    """Run the diagonal to ``cfg.depth`` rows and classify the antidiagonal's tail."""
    if cfg.depth < 1:
        raise ValueError("depth must be >= 1")
    return run_dm(cfg)


def run_dm(cfg: DMConfig) -> DMReport:
    lst = cfg.list
    base = lst.base
    diag, anti = antidiagonal_digits(cfg)
    stop = lst.start_index + cfg.depth
    proof = _proof_row(lst, stop) if cfg.rule.deterministic else None

    eventual = tail_from = None
    if proof is not None:
        eventual = cfg.rule.replace(lst.digit_bound.tail_digit)
        tail_from = lst.diagonal_position(proof)
        if any(d != eventual for d in anti[tail_from - 1:]):
            raise AssertionError(f"{lst.description}: digit bound metadata contradicts the entries")
        # extend the proven run backwards over explicit digits
        while tail_from > 1 and anti[tail_from - 2] == eventual:
            tail_from -= 1

    if eventual is not None and eventual in (0, base - 1):
        tail = TailVerdict(TailVerdictKind.CONSTANT, eventual, tail_from)
        head = WritableNumber(base, (0,), anti[: tail_from - 1] or (0,))
        if tail_from == 1:
            head = WritableNumber(base, (0,), (0,))
        limit = limit_of_prefix(head, eventual) if tail_from > 1 else Fraction(eventual, base - 1)
        membership = _membership(lst, limit)
    else:
        tail = NO_TAIL
        limit = None
        membership = Membership(MembershipKind.NOT_IN_PREFIX)
    return DMReport(cfg, anti, diag, tail, limit, membership, eventual, tail_from)


def _membership(lst: ListSpec, limit: Fraction) -> Membership:
    if lst.rank_of is None or limit >= 1:
        return Membership(MembershipKind.UNDETERMINED)
    try:
        w = render(limit, lst.base)
    except NotWritable:
        return Membership(MembershipKind.UNDETERMINED)
    try:
        pos = lst.rank_of(w)
    except NotFound:
        return Membership(MembershipKind.NOT_IN_PREFIX)
    entry = lst.entry(pos)
    if entry.value_hint != limit:
        raise AssertionError(f"rank function returned {pos} whose value {entry.value_hint} != {limit}")
    return Membership(MembershipKind.IN_LIST, pos)


def limit_check(report: DMReport) -> bool:
    """Recompute the limit from the prefix and the geometric tail."""
    if report.tail.kind is not TailVerdictKind.CONSTANT:
        return report.limit is None
    k = report.tail.start - 1
    head = WritableNumber(report.config.list.base, (0,), report.digits[:k] or (0,))
    b = report.config.list.base
    expected = value_of(head) + Fraction(report.tail.digit, b**k) / (b - 1)
    return expected == report.limit
