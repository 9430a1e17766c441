import csv
import io
import json

import pytest

from diaglab.tables import TABLE_IDS, UnknownTable, build_table, render_table, w2_rows
from diaglab.verify import golden_dir


@pytest.mark.parametrize("name, kwargs", [
    ("table1", dict(table_id=1)),
    ("table2", dict(table_id=2)),
    ("table3", dict(table_id=2, grid=True)),
    ("table4", dict(table_id=4)),
    ("table5", dict(table_id=5)),
    ("table6", dict(table_id=6)),
    ("table7", dict(table_id=7)),
    ("table8", dict(table_id=8)),
    ("table9", dict(table_id=9)),
])
def test_default_render_matches_golden(name, kwargs):
    assert render_table(**kwargs) == (golden_dir() / f"{name}.txt").read_text()


def test_table6_values():
    t = build_table(6)
    assert [row[-1] for row in t.rows] == ["11/100", "1/10", "rational", "random"]
    assert [row[2] for row in t.rows] == ["yes", "yes", "no", "no"]


@pytest.mark.parametrize("table_id", TABLE_IDS)
def test_csv_and_json_agree_with_text(table_id):
    table = build_table(table_id)
    rows = list(csv.reader(io.StringIO(table.render("csv"))))
    assert tuple(rows[0]) == table.columns
    assert [tuple(r) for r in rows[1:]] == list(table.rows)
    text = table.render("json")
    data = json.loads(text)
    assert json.dumps(data, indent=2) + "\n" == text
    assert data["rows"] == [list(r) for r in table.rows]


def test_render_is_deterministic():
    assert render_table(6, depth=40, seed=3) == render_table(6, depth=40, seed=3)


def test_row_counts():
    assert len(build_table(4, rows=3).rows) == 3
    assert len(build_table(9, rows=6, symbols=2).rows) == 6
    with pytest.raises(ValueError):
        build_table(9, rows=7, symbols=2)
    with pytest.raises(ValueError):
        build_table(1, rows=0)


def test_grid_only_for_table2():
    assert build_table(2, grid=True, cols=3).columns == ("", ".0", ".1", ".01")
    with pytest.raises(ValueError):
        build_table(4, grid=True)


def test_unknown_table():
    with pytest.raises(UnknownTable):
        build_table(3)
    with pytest.raises(ValueError):
        build_table(1).render("yaml")


def test_w2_rows():
    assert w2_rows(4) == ["0.0", "0.1", "1.0", "0.01"]
