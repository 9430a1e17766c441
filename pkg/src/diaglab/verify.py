"""Self-check suite behind ``diaglab verify``.

Each check returns a list of failure messages; an empty list is a pass.
Check ids are ``<group>:<aspect>`` and output is ordered by id.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from .constants import Constant, stream_of_constant
from .diagonal import DMConfig, MembershipKind, ReplacementRule, TailVerdictKind, limit_check, run_dm
from .enumerations import (
    applicative_count,
    applicative_list,
    di,
    di_inverse,
    l1,
    ldi,
    ldi_dprime,
    lex_list,
    select,
    selector_decode,
    selector_encode,
    w2_list,
)
from .numeral import Ending, WritableNumber, is_writable, render, value_of
from .presets import BASE10_VARIANTS, reordered_pool
from .shuffles import S0, apply_shuffle
from .streams import approximate, stream_of_rational
from .tables import render_table

Check = Callable[[], "list[str]"]

FLIP = ReplacementRule.parse("flip")

# Published expected values, transcribed cell by cell.
TABLE1_PREFIXES = ["0.0", "0.01", "0.011", "0.0111", "0.01111"]
TABLE2_ENTRIES = ["0.00000000", "0.10000000", "0.01000000", "0.11000000", "0.00100000",
                  "0.10100000", "0.01100000", "0.11100000", "0.00010000"]
TABLE4_POSITIONS = [1, 2, 6, 14, 30, 62, 126, 254, 510, 1022]
TABLE5_ENTRIES = ["0.01111111111", "0.00111111111", "0.10111111111", "0.00011111111",
                  "0.10011111111", "0.01011111111", "0.11011111111", "0.00001111111",
                  "0.10001111111"]
TABLE5_PREFIXES = ["0.1", "0.11", "0.110", "0.1100", "0.11000", "0.110000", "0.1100000",
                   "0.11000000", "0.110000000"]
TABLE7_EXPANSIONS = {
    Constant.SQRT2_MINUS_1: "01101010000",
    Constant.SQRT3_MINUS_1: "10111011011",
    Constant.LOG2: "10110001011",
    Constant.PI_MINUS_3: "00100100001",
    Constant.E_MINUS_2: "10110111111",
}
TABLE7_REORDERED = ["0", "log(2)", "3/4", "sqrt(3)-1", "sqrt(2)-1", "pi-3", "e-2"]
TABLE9_APPLICATIVE = ("1 2 11 12 21 22 3 13 23 31 32 33 111 112 113 121 122 123 131 132 133 "
                      "211 212 213 221 222 223 231 232 233 311 312 313 321 322 323 331 332 333").split()
W2_FIRST = ("0.0 0.1 1.0 0.01 1.1 10.0 0.11 1.01 10.1 11.0 0.001 1.11 10.01 11.1 100.0").split()


def _expect(label, got, want) -> list[str]:
    return [] if got == want else [f"{label}: got {got!r}, expected {want!r}"]


# -- table 1 -------------------------------------------------------------------

def check_table1() -> list[str]:
    report = run_dm(DMConfig(l1(), FLIP, 33))
    errors = []
    rows = list(report.trace())
    errors += _expect("prefixes", [str(r.prefix) for r in rows[:5]], TABLE1_PREFIXES)
    errors += _expect("positions", [r.position for r in rows[:5]], [1, 2, 3, 4, 5])
    bad = [r.n for r in rows if r.position != r.n + 1]
    if bad:
        errors.append(f"position law n+1 fails at rows {bad[:5]}")
    return errors


# -- table 2 -------------------------------------------------------------------

def check_table2() -> list[str]:
    lst = ldi()
    got = ["0." + "".join(map(str, lst.entry(n).digits(8))) for n in range(9)]
    return _expect("entries", got, TABLE2_ENTRIES)


# -- table 4 -------------------------------------------------------------------

def check_table4() -> list[str]:
    report = run_dm(DMConfig(apply_shuffle(S0, ldi()), FLIP, 21))
    errors = []
    positions = [report.position(n) for n in range(21)]
    errors += _expect("positions 0..9", positions[:10], TABLE4_POSITIONS)
    law = [n for n in range(1, 21) if positions[n] != 2 ** (n + 1) - 2]
    if law:
        errors.append(f"2^(n+1)-2 law fails at {law}")
    errors += _expect("tail", (report.tail.kind, report.tail.digit, report.tail.start),
                      (TailVerdictKind.CONSTANT, 1, 2))
    errors += _expect("limit", report.limit, Fraction(1, 2))
    errors += _expect("membership", (report.membership.kind, report.membership.position),
                      (MembershipKind.IN_LIST, 0))
    return errors


# -- table 5 -------------------------------------------------------------------

def check_table5() -> list[str]:
    lst = ldi_dprime()
    report = run_dm(DMConfig(lst, FLIP, 20))
    errors = []
    got = ["0." + "".join(map(str, lst.entry(n).digits(11))) for n in range(1, 10)]
    errors += _expect("entries", got, TABLE5_ENTRIES)
    errors += _expect("prefixes", [str(report.prefix(n)) for n in range(1, 10)], TABLE5_PREFIXES)
    bad = [n for n in range(2, 21) if report.position(n) != 3]
    if bad:
        errors.append(f"position 3 fails at rows {bad}")
    errors += _expect("limit", report.limit, Fraction(3, 4))
    errors += _expect("membership", (report.membership.kind, report.membership.position),
                      (MembershipKind.IN_LIST, 3))
    return errors


# -- table 6 -------------------------------------------------------------------

def _variant(author: str):
    return next(v for v in BASE10_VARIANTS if v.author == author)


def check_table6_forced() -> list[str]:
    errors = []
    hawking = run_dm(_variant("S. Hawking").config(64))
    hofstadter = run_dm(_variant("D. R. Hofstadter").config(64))
    errors += _expect("hawking limit", hawking.limit, Fraction(11, 100))
    errors += _expect("hofstadter limit", hofstadter.limit, Fraction(1, 10))
    for name, rep in (("hawking", hawking), ("hofstadter", hofstadter)):
        if rep.membership.kind is not MembershipKind.IN_LIST:
            errors.append(f"{name}: limit not found in the list")
        if not limit_check(rep):
            errors.append(f"{name}: limit disagrees with prefix plus geometric tail")
    return errors


def check_table6_penrose(depth: int = 10_000) -> list[str]:
    cfg = _variant("R. Penrose").config(depth)
    report = run_dm(cfg)
    errors = _expect("tail", report.tail.kind, TailVerdictKind.NONE)
    errors += _expect("membership", report.membership.kind, MembershipKind.NOT_IN_PREFIX)
    if len(report.digits) != depth:
        errors.append(f"ran {len(report.digits)} rows, expected {depth}")
    # digit i+1 of every prefix differs from entry i, so each D_n differs
    # from the first n+1 entries; the diagonal must therefore never agree
    same = [n for n, (a, d) in enumerate(zip(report.digits, report.diagonal)) if a == d]
    if same:
        errors.append(f"antidiagonal equals diagonal at rows {same[:5]}")
    # no antidiagonal digit is 0, so D_n keeps n+1 digits and ranks at >= 10^n > n
    if 0 in report.digits:
        errors.append("antidiagonal has a zero digit")
    lst = cfg.list
    for n in range(200):
        prefix = report.prefix(n).fractional_digits
        for i in range(n + 1):
            if lst.entry(i).digits(n + 1) == prefix:
                errors.append(f"prefix at row {n} equals entry {i}")
    return errors


def check_table6_dunham() -> list[str]:
    errors = []
    variant = _variant("W. Dunham")
    for seed in (0, 1, 42):
        a = run_dm(variant.config(500, seed))
        b = run_dm(variant.config(500, seed))
        if a.digits != b.digits:
            errors.append(f"seed {seed}: runs differ")
        if any(x == y for x, y in zip(a.digits, a.diagonal)):
            errors.append(f"seed {seed}: an antidiagonal digit equals its diagonal digit")
        if not set(a.digits) <= set(range(1, 9)):
            errors.append(f"seed {seed}: digit outside 1..8")
    if run_dm(variant.config(500, 1)).digits == run_dm(variant.config(500, 2)).digits:
        errors.append("different seeds gave identical runs")
    return errors


# -- table 7 -------------------------------------------------------------------

def check_table7_expansions() -> list[str]:
    errors = []
    for c, want in TABLE7_EXPANSIONS.items():
        got = "".join(map(str, stream_of_constant(c, 2).digits(11)))
        errors += _expect(c.value, got, want)
    return errors


def check_table7_dual_oracle(count: int = 64) -> list[str]:
    errors = []
    for c in Constant:
        for base in (2, 10):
            a = stream_of_constant(c, base, "primary").digits(count)
            b = stream_of_constant(c, base, "secondary").digits(count)
            if a != b:
                first = next(i for i in range(count) if a[i] != b[i]) + 1
                errors.append(f"{c.value} base {base}: oracles disagree at digit {first}")
    return errors


def check_table7_reorder() -> list[str]:
    reordered = reordered_pool()
    errors = _expect("order", [reordered.label(n) for n in range(1, 8)], TABLE7_REORDERED)
    report = run_dm(DMConfig(reordered, FLIP, 7))
    errors += _expect("trace", [str(report.prefix(n)) for n in range(1, 8)], TABLE5_PREFIXES[:7])
    if value_of(report.prefix(7)) != Fraction(3, 4) or reordered.entry(3).value_hint != Fraction(3, 4):
        errors.append("reordered prefix does not land on 3/4 at line 3")
    return errors


# -- table 8 / selectors --------------------------------------------------------

def check_table8() -> list[str]:
    errors = []
    for code in range(1 << 16):
        if selector_encode(selector_decode(code)) != code:
            errors.append(f"roundtrip fails for {code}")
            break
    errors += _expect("worked example", select([3, 42, 2, 22], 0b1001), [3, 22])
    errors += _expect("encode", selector_encode({0, 3}), 0b1001)
    return errors


# -- table 9 / applicative numbering --------------------------------------------

def check_table9() -> list[str]:
    errors = _expect("applicative (3,3)", applicative_list(3, 3), TABLE9_APPLICATIVE)
    for n in range(1, 7):
        if applicative_count(n, n) != len(applicative_list(n, n)):
            errors.append(f"count mismatch for n={n}")
        if n > 1 and applicative_list(n)[: applicative_count(n - 1, n - 1)] != applicative_list(n - 1):
            errors.append(f"App({n}) does not start with App({n - 1})")
    for n in range(1, 6):
        if sorted(applicative_list(n, n)) != sorted(lex_list(n, n)):
            errors.append(f"applicative and lexicographic differ as multisets for n={n}")
    return errors


# -- valuation properties ---------------------------------------------------------

def check_valuation(samples: int = 10_000, seed: int = 1234) -> list[str]:
    rng = random.Random(seed)
    errors = []
    for base in (2, 3, 10, 16):
        for _ in range(samples):
            ip = tuple(rng.randrange(base) for _ in range(rng.randrange(1, 6)))
            fp = tuple(rng.randrange(base) for _ in range(rng.randrange(1, 10)))
            w = WritableNumber(base, ip, fp).canonical()
            if render(value_of(w), base) != w:
                errors.append(f"roundtrip fails for {w} base {base}")
                break
    primes = [p for p in range(2, 100) if all(p % q for q in range(2, p))]
    for base in (2, 10):
        for p in primes:
            if base % p and is_writable(Fraction(1, p), base):
                errors.append(f"1/{p} reported writable in base {base}")
    for x in (Fraction(1, 3), Fraction(2, 7), Fraction(5, 12), Fraction(1, 2), Fraction(13, 16)):
        s = stream_of_rational(x, 2)
        for k in range(65):
            if not abs(x - value_of(approximate(s, k))) < Fraction(1, 2**k):
                errors.append(f"approximation bound fails for {x} at k={k}")
                break
    return errors


# -- digital inversion properties ---------------------------------------------------

def check_inversion() -> list[str]:
    errors = []
    for n in range(1 << 20):
        if di_inverse(di(n)) != n:
            errors.append(f"roundtrip fails at {n}")
            break
    lst = ldi()
    for k in range(13):
        size = 1 << k
        heads = [lst.entry(n).digits(k) for n in range(3 * size)]
        counts: dict = {}
        for h in heads[:size]:
            counts[h] = counts.get(h, 0) + 1
        # slide the block over starts 0..2*size, every start must see all 2^k heads
        for s in range(2 * size + 1):
            if len(counts) != size:
                errors.append(f"block of {size} starting at {s} misses a {k}-digit fraction")
                break
            if s + size >= len(heads):
                break
            old, new = heads[s], heads[s + size]
            counts[old] -= 1
            if not counts[old]:
                del counts[old]
            counts[new] = counts.get(new, 0) + 1
    errors += _expect("w2 order", [str(w2_list(n)) for n in range(15)], W2_FIRST)
    return errors


# -- golden files -------------------------------------------------------------------

GOLDEN = {
    "table1": dict(table_id=1),
    "table2": dict(table_id=2),
    "table3": dict(table_id=2, grid=True),
    "table4": dict(table_id=4),
    "table5": dict(table_id=5),
    "table6": dict(table_id=6),
    "table7": dict(table_id=7),
    "table8": dict(table_id=8),
    "table9": dict(table_id=9),
}


def golden_dir() -> Path:
    return Path(str(resources.files("diaglab") / "golden"))


def _golden_check(name: str, directory: Optional[Path]) -> Check:
    def check() -> list[str]:
        path = (directory or golden_dir()) / f"{name}.txt"
        if not path.exists():
            return [f"missing golden file {path}"]
        want = path.read_text()
        got = render_table(**GOLDEN[name])
        if got == want:
            return []
        for i, (a, b) in enumerate(zip(got.splitlines(), want.splitlines()), 1):
            if a != b:
                return [f"{path.name} line {i}: rendered {a!r}, golden {b!r}"]
        return [f"{path.name}: line count differs"]

    return check


@dataclass(frozen=True)
class CheckResult:
    id: str
    errors: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def all_checks(golden: Optional[Path] = None) -> dict[str, Check]:
    checks: dict[str, Check] = {
        "table1:positions": check_table1,
        "table2:entries": check_table2,
        "table4:positions": check_table4,
        "table5:entries": check_table5,
        "table6:forced": check_table6_forced,
        "table6:penrose": check_table6_penrose,
        "table6:dunham": check_table6_dunham,
        "table7:expansions": check_table7_expansions,
        "table7:dual-oracle": check_table7_dual_oracle,
        "table7:reorder": check_table7_reorder,
        "table8:selectors": check_table8,
        "table9:applicative": check_table9,
        "valuation:properties": check_valuation,
        "inversion:properties": check_inversion,
    }
    for name in GOLDEN:
        checks[f"{name}:golden"] = _golden_check(name, golden)
    return dict(sorted(checks.items()))


def select_checks(only: Optional[list[str]] = None, golden: Optional[Path] = None) -> dict[str, Check]:
    checks = all_checks(golden)
    if not only:
        return checks
    picked = {k: v for k, v in checks.items() if any(k == o or k.startswith(o + ":") for o in only)}
    unknown = [o for o in only if not any(k == o or k.startswith(o + ":") for k in checks)]
    if unknown:
        raise KeyError(f"no checks match {', '.join(unknown)}")
    return picked


def run_checks(only: Optional[list[str]] = None, golden: Optional[Path] = None) -> list[CheckResult]:
    results = []
    for cid, fn in select_checks(only, golden).items():
        try:
            errors = tuple(fn())
        except Exception as exc:  # a crash is a failed check, not a crashed report
            errors = (f"{type(exc).__name__}: {exc}",)
        results.append(CheckResult(cid, errors))
    return results
