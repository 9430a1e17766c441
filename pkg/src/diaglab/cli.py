"""Command-line front end: ``table``, ``diagonal``, ``digits``, ``list`` and ``verify``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .constants import Constant, stream_of_constant
from .diagonal import DMConfig, DMReport, MembershipKind, ReplacementRule, run_dm
from .enumerations import applicative_list, lex_list, w2_list
from .numeral import format_rational
from .presets import DIGIT_LISTS, ENDINGS, NAMED_LISTS, default_depth, named_list
from .shuffles import parse_shuffle
from .tables import FORMATS, TABLE_IDS, UnknownTable, render_table
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diaglab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="render one of the reproduced tables")
    t.add_argument("id", type=int, help=f"table id, one of {', '.join(map(str, TABLE_IDS))}")
    t.add_argument("--rows", type=int, default=None)
    t.add_argument("--format", choices=FORMATS, default="text")
    t.add_argument("--grid", action="store_true", help="with table 2: the integer x fraction grid")
    t.add_argument("--cols", type=int, default=6, help="grid columns")
    t.add_argument("--symbols", type=int, default=3, help="alphabet size for table 9")
    t.add_argument("--depth", type=int, default=None, help="diagonal depth for table 6")
    t.add_argument("--seed", type=int, default=0, help="seed for the random rule in table 6")

    d = sub.add_parser("diagonal", help="run the diagonal method on a named list")
    d.add_argument("--list", dest="list_name", choices=DIGIT_LISTS, default="ldi")
    d.add_argument("--base", type=int, default=2)
    d.add_argument("--rule", default="flip",
                   help="flip, hawking, hofstadter, penrose or dunham")
    d.add_argument("--shuffle", default=None, help="s0, swap:i,j or compose:a+b")
    d.add_argument("--ending", choices=sorted(ENDINGS), default=None)
    d.add_argument("--depth", type=int, default=None)
    d.add_argument("--seed", type=int, default=None)
    d.add_argument("--format", choices=FORMATS, default="text")

    g = sub.add_parser("digits", help="print guaranteed digits of a constant")
    g.add_argument("constant", choices=[c.value for c in Constant])
    g.add_argument("--base", type=int, default=2)
    g.add_argument("--count", type=int, default=11)
    g.add_argument("--method", choices=("primary", "secondary"), default="primary")

    lst = sub.add_parser("list", help="print the first entries of a named list")
    lst.add_argument("name", choices=NAMED_LISTS)
    lst.add_argument("--count", type=int, default=16)
    lst.add_argument("--base", type=int, default=2)
    lst.add_argument("--ending", choices=sorted(ENDINGS), default=None)
    lst.add_argument("--shuffle", default=None)
    lst.add_argument("--digits", type=int, default=11, help="digits shown per entry")
    lst.add_argument("--symbols", type=int, default=3, help="alphabet size for lex/applicative")

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--only", action="append", default=None, help="check id or group (repeatable)")
    v.add_argument("--format", choices=FORMATS, default="text")
    v.add_argument("--golden-dir", type=Path, default=None)
    return p


# -- diagonal ----------------------------------------------------------------------

def build_config(args) -> DMConfig:
    ending = ENDINGS[args.ending] if args.ending else None
    shuffle = parse_shuffle(args.shuffle) if args.shuffle else None
    lst = named_list(args.list_name, args.base, ending, shuffle)
    rule = ReplacementRule.parse(args.rule, args.seed)
    depth = args.depth if args.depth is not None else default_depth(20)
    return DMConfig(lst, rule, depth)


def render_report(report: DMReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    rows = [(str(r.n), str(r.prefix), "" if r.position is None else str(r.position))
            for r in report.trace()]
    if fmt == "csv":
        return "\n".join([",".join(("n", "prefix", "position"))] + [",".join(r) for r in rows]) + "\n"
    cfg = report.config.to_dict()
    lines = ["config: " + ", ".join(f"{k}={v}" for k, v in cfg.items())]
    lines.append("n | prefix | position")
    lines += [" | ".join(r) for r in rows]
    if report.tail.digit is None:
        lines.append("tail: none within depth")
    else:
        lines.append(f"tail: digit {report.tail.digit} from position {report.tail.start}")
    lines.append("limit: " + ("none" if report.limit is None else format_rational(report.limit)))
    m = report.membership
    lines.append("membership: " + (f"in list at {m.position}" if m.kind is MembershipKind.IN_LIST
                                   else m.kind.value))
    return "\n".join(lines) + "\n"


# -- list ----------------------------------------------------------------------------

def list_entries(args) -> list[tuple[str, str]]:
    n = args.count
    if args.name == "w2":
        return [(str(i), str(w2_list(i))) for i in range(n)]
    if args.name in ("lex", "applicative"):
        fn = lex_list if args.name == "lex" else applicative_list
        words = fn(args.symbols, args.symbols)
        return [(str(i + 1), w) for i, w in enumerate(words[:n])]
    if args.name == "selectors":
        return [(str(i), format(i, "b")) for i in range(n)]
    ending = ENDINGS[args.ending] if args.ending else None
    shuffle = parse_shuffle(args.shuffle) if args.shuffle else None
    lst = named_list(args.name, args.base, ending, shuffle)
    return [(str(i), lst.entry(i).text(args.digits)) for i in lst.indices(n)]


# -- main ----------------------------------------------------------------------------

def _run(args) -> int:
    out = sys.stdout
    if args.command == "table":
        options = {"cols": args.cols, "symbols": args.symbols, "seed": args.seed}
        if args.depth is not None:
            options["depth"] = args.depth
        out.write(render_table(args.id, args.rows, args.format, args.grid, **options))
        return EXIT_OK
    if args.command == "diagonal":
        out.write(render_report(run_dm(build_config(args)), args.format))
        return EXIT_OK
    if args.command == "digits":
        if args.count < 0:
            raise UsageError("--count must be non-negative")
        s = stream_of_constant(args.constant, args.base, args.method)
        out.write(s.text(args.count) + "\n")
        return EXIT_OK
    if args.command == "list":
        rows = list_entries(args)
        out.write("".join(f"{i} | {v}\n" for i, v in rows))
        return EXIT_OK
    if args.command == "verify":
        try:
            results = run_checks(args.only, args.golden_dir)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if args.format == "json":
            out.write(json.dumps([{"id": r.id, "ok": r.ok, "errors": list(r.errors)} for r in results],
                                 indent=2) + "\n")
        else:
            sep = "," if args.format == "csv" else " "
            if args.format == "csv":
                out.write("id,status\n")
            for r in results:
                out.write(f"{r.id}{sep}{'PASS' if r.ok else 'FAIL'}\n")
                if args.format == "text":
                    for e in r.errors:
                        out.write(f"    {e}\n")
        return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL
    raise UsageError(f"unknown command {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (UsageError, UnknownTable, ValueError, KeyError) as exc:
        print(f"diaglab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
