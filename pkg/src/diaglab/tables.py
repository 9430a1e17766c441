"""Rendering of the reproduced tables as text, CSV or JSON.

Text rows are the cells joined by `` | ``.  CSV goes through the stdlib
writer, so only the few headers that contain a comma get quoted.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .diagonal import DMConfig, ReplacementRule, run_dm
from .enumerations import (
    applicative_list,
    di,
    l1,
    ldi,
    ldi_dprime,
    lex_list,
    w2_list,
)
from .numeral import WritableNumber, format_rational, int_digits
from .presets import BASE10_VARIANTS, default_depth, real_pool, reordered_pool
from .shuffles import S0, apply_shuffle, s0

TABLE_IDS = (1, 2, 4, 5, 6, 7, 8, 9)
FORMATS = ("text", "csv", "json")


class UnknownTable(ValueError):
    pass


@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            lines = [" | ".join(self.columns)]
            lines += [" | ".join(row) for row in self.rows]
            return "\n".join(lines) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(self.rows)
            return buf.getvalue()
        if fmt == "json":
            return json.dumps(
                {"table": self.name, "columns": list(self.columns), "rows": [list(r) for r in self.rows]},
                indent=2,
            ) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


DEFAULT_ROWS = {1: 5, 2: 9, 3: 7, 4: 10, 5: 9, 6: 4, 7: 7, 8: 17, 9: 39}


def _diag_rows(cfg: DMConfig, entry_digits: int, extra=None):
    report = run_dm(cfg)
    lst = cfg.list
    out = []
    for row in report.trace():
        cells = [str(row.n)]
        if extra is not None:
            cells.append(extra(row.n))
        cells += [lst.entry(row.n).text(entry_digits), str(row.prefix), str(row.position)]
        out.append(tuple(cells))
    return out


def table1(rows: int) -> Table:
    lst = l1()
    report = run_dm(DMConfig(lst, ReplacementRule.parse("flip"), rows))
    out = []
    for row in report.trace():
        found = lst.entry(row.position).prefix(len(row.prefix.fractional_digits))
        out.append((str(row.n), lst.entry(row.n).text(8), str(row.prefix), str(row.position), str(found)))
    return Table("1", ("n", "L1(n)", "D(L1)_n", "Pos(D_n)", "L1(Pos(D_n))_n"), tuple(out))


def table2(rows: int) -> Table:
    lst = ldi()
    out = tuple(
        (str(n), "".join(map(str, int_digits(n, 2))), lst.entry(n).text(8)) for n in range(rows)
    )
    return Table("2", ("n", "Base2(n)", "LDI(n)"), out)


def table3(rows: int, cols: int = 6) -> Table:
    """The integer x fraction grid walked by :func:`w2_list`."""
    header = ("",) + tuple("." + "".join(map(str, di(j).fractional_digits)) for j in range(cols))
    out = []
    for i in range(rows):
        ip = int_digits(i, 2)
        cells = [str(WritableNumber(2, ip, di(j).fractional_digits)) for j in range(cols)]
        out.append(("".join(map(str, ip)),) + tuple(cells))
    return Table("3", header, tuple(out))


def table4(rows: int) -> Table:
    cfg = DMConfig(apply_shuffle(S0, ldi()), ReplacementRule.parse("flip"), rows)
    return Table(
        "4",
        ("n", "S0(n)", "LDI'(n)", "D(LDI')_n", "Pos(D_n)"),
        tuple(_diag_rows(cfg, 11, extra=lambda n: str(s0(n)))),
    )


def table5(rows: int) -> Table:
    cfg = DMConfig(ldi_dprime(), ReplacementRule.parse("flip"), rows)
    return Table("5", ("n", "LDI''(n)", "D(LDI'')_n", "Pos(D_n)"), tuple(_diag_rows(cfg, 11)))


def table6(rows: int, depth: Optional[int] = None, seed: int = 0) -> Table:
    depth = default_depth(64) if depth is None else depth
    out = []
    for variant in BASE10_VARIANTS[:rows]:
        cfg = variant.config(depth, seed)
        report = run_dm(cfg)
        if report.limit is not None:
            val = format_rational(report.limit)
        elif report.eventual_digit is not None:
            val = "rational"
        else:
            val = "random"
        out.append((
            variant.author,
            cfg.rule.text,
            "yes" if cfg.rule.can_be_forced() else "no",
            variant.ending_text,
            variant.shuffle_text,
            val,
        ))
    return Table(
        "6",
        ("Author", "Replacement digit", "Can be forced to fail?", "Ending", "S0 applied", "Val(D)"),
        tuple(out),
    )


def table7(rows: int) -> Table:
    pool = real_pool()
    reordered = reordered_pool()
    out = []
    for n in range(1, min(rows, 7) + 1):
        out.append((
            str(n),
            pool.label(n),
            pool.entry(n).text(11),
            reordered.label(n),
            reordered.entry(n).text(11),
        ))
    return Table("7", ("n", "LR(n)", "Base2(LR(n))", "LR'(n)", "Base2(LR'(n))"), tuple(out))


def table8(rows: int) -> Table:
    width = max(7, (rows - 1).bit_length())
    out = tuple((str(n), "..." + format(n, f"0{width}b")) for n in range(rows))
    return Table("8", ("n", "Base2(n)"), out)


def table9(rows: int, symbols: int = 3) -> Table:
    standard = lex_list(symbols, symbols)
    applicative = applicative_list(symbols, symbols)
    if rows > len(standard):
        raise ValueError(f"only {len(standard)} strings exist for {symbols} symbols")
    out = tuple((str(i + 1), standard[i], applicative[i]) for i in range(rows))
    return Table("9", ("n", f"Standard ({symbols}, {symbols})", f"Applicative ({symbols}, {symbols})"), out)


def build_table(table_id: int, rows: Optional[int] = None, grid: bool = False, **options) -> Table:
    if table_id not in TABLE_IDS:
        raise UnknownTable(f"unknown table {table_id}; expected one of {TABLE_IDS}")
    if grid:
        if table_id != 2:
            raise ValueError("--grid applies to table 2 only")
        return table3(rows or DEFAULT_ROWS[3], options.get("cols", 6))
    rows = DEFAULT_ROWS[table_id] if rows is None else rows
    if rows < 1:
        raise ValueError("rows must be >= 1")
    builders = {1: table1, 2: table2, 4: table4, 5: table5, 6: table6, 7: table7, 8: table8, 9: table9}
    kwargs = {}
    if table_id == 9 and "symbols" in options:
        kwargs["symbols"] = options["symbols"]
    if table_id == 6:
        kwargs = {k: options[k] for k in ("depth", "seed") if k in options}
    return builders[table_id](rows, **kwargs)


def render_table(table_id: int, rows: Optional[int] = None, fmt: str = "text", grid: bool = False,
                 **options) -> str:
    return build_table(table_id, rows, grid, **options).render(fmt)


def w2_rows(count: int) -> list[str]:
    return [str(w2_list(n)) for n in range(count)]
