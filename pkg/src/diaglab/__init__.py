"""Exact positional numerals, enumeration codecs, digit oracles and a diagonal-method engine."""

from .constants import Constant, ConstantStream, RefinementBudgetExceeded, stream_of_constant
from .diagonal import (
    DMConfig,
    DMReport,
    Membership,
    MembershipKind,
    ReplacementRule,
    RuleBaseMismatch,
    RuleKind,
    TailVerdict,
    TailVerdictKind,
    antidiagonal_prefix,
    detect_tail,
    position_of_prefix,
    run_dm,
)
from .enumerations import (
    InvalidShape,
    ListSpec,
    NotFound,
    OutOfAlphabet,
    OutOfRange,
    RowDigitBound,
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
    w2_list,
    w2_rank,
)
from .numeral import (
    Ending,
    NoSuchRepresentation,
    NotWritable,
    WritableNumber,
    format_rational,
    is_writable,
    render,
    split,
    value_of,
)
from .shuffles import (
    S0,
    PoolExhausted,
    Shuffle,
    apply_shuffle,
    compose,
    parse_shuffle,
    s0,
    skeleton_reorder,
    swap,
)
from .streams import (
    DigitStream,
    Tail,
    TailKind,
    approximate,
    convert_ending,
    stream_of_rational,
    stream_of_writable,
    truncate,
)

__version__ = "0.1.0"
