"""Named lists and the ready-made diagonal-method configurations."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constants import Constant, stream_of_constant
from .diagonal import DMConfig, ReplacementRule
from .enumerations import ListSpec, finite_list, l1, ldi, ldi_dprime
from .numeral import Ending
from .shuffles import S0, Shuffle, apply_shuffle, skeleton_reorder
from .streams import stream_of_rational

DIGIT_LISTS = ("l1", "ldi", "ldi-prime", "ldi-dprime")
NAMED_LISTS = DIGIT_LISTS + ("w2", "lex", "applicative", "selectors")

ENDINGS = {"zero": Ending.ZERO, "0": Ending.ZERO, "max": Ending.MAX, "one": Ending.MAX,
           "nine": Ending.MAX, "1": Ending.MAX, "9": Ending.MAX}


def default_depth(fallback: int) -> int:
    """``DIAGLAB_DEPTH`` overrides every default depth."""
    value = os.environ.get("DIAGLAB_DEPTH")
    if not value:
        return fallback
    depth = int(value)
    if depth < 0:
        raise ValueError("DIAGLAB_DEPTH must be non-negative")
    return depth


def named_list(name: str, base: int = 2, ending: Optional[Ending] = None,
               shuffle: Optional[Shuffle] = None) -> ListSpec:
    """Build one of the digit lists by name, then apply ``shuffle`` if given."""
    if name == "l1":
        if base != 2 or ending not in (None, Ending.ZERO):
            raise ValueError("l1 is a 0-ending binary list")
        lst = l1()
    elif name == "ldi":
        lst = ldi(base, ending or Ending.ZERO)
    elif name == "ldi-prime":
        lst = apply_shuffle(S0, ldi(base, ending or Ending.ZERO))
    elif name == "ldi-dprime":
        if base != 2 or ending not in (None, Ending.MAX):
            raise ValueError("ldi-dprime is the 1-ending binary list")
        lst = ldi_dprime()
    else:
        raise ValueError(f"unknown digit list {name!r}; expected one of {', '.join(DIGIT_LISTS)}")
    if shuffle is not None:
        lst = apply_shuffle(shuffle, lst)
    return lst


@dataclass(frozen=True)
class Variant:
    """One row of the base-10 comparison: a replacement rule and the list it runs on."""

    author: str
    rule: str
    ending: Optional[Ending]
    shuffled: bool

    @property
    def ending_text(self) -> str:
        if self.ending is None:
            return "any"
        return "9-ending" if self.ending is Ending.MAX else "0-ending"

    @property
    def shuffle_text(self) -> str:
        if self.ending is None:
            return "-"
        return "yes" if self.shuffled else "no"

    def config(self, depth: int, seed: Optional[int] = None) -> DMConfig:
        lst = ldi(10, self.ending or Ending.ZERO)
        if self.shuffled:
            lst = apply_shuffle(S0, lst)
        return DMConfig(lst, ReplacementRule.parse(self.rule, seed), depth)


# Lists for "any" rows are the plain 0-ending DI list.
BASE10_VARIANTS = (
    Variant("S. Hawking", "hawking", Ending.MAX, True),
    Variant("D. R. Hofstadter", "hofstadter", Ending.ZERO, True),
    Variant("R. Penrose", "penrose", None, False),
    Variant("W. Dunham", "dunham", None, False),
)


REAL_POOL = (
    (Fraction(3, 4), "3/4"),
    (Constant.LOG2, "log(2)"),
    (Fraction(0), "0"),
    (Constant.SQRT2_MINUS_1, "sqrt(2)-1"),
    (Constant.SQRT3_MINUS_1, "sqrt(3)-1"),
    (Constant.PI_MINUS_3, "pi-3"),
    (Constant.E_MINUS_2, "e-2"),
)


def real_pool(method: str = "primary") -> ListSpec:
    """Seven reals in (0, 1] order, 1-ending where a choice exists, lines numbered from 1."""
    entries = []
    for value, _ in REAL_POOL:
        if isinstance(value, Constant):
            entries.append(stream_of_constant(value, 2, method))
        else:
            entries.append(stream_of_rational(value, 2, Ending.MAX))
    return finite_list(entries, [label for _, label in REAL_POOL], start_index=1,
                       ending=Ending.MAX, description="real pool")


def reordered_pool(depth: int = 7) -> ListSpec:
    """The pool reordered so its diagonal and line 3 follow the 1-ending DI list."""
    return skeleton_reorder(real_pool(), ldi_dprime(), pinned=[(Fraction(3, 4), 3)], depth=depth)
