import time

from hyperjet import tables


def test_curve_table_matches_golden():
    assert tables.diff_tables(
        tables.bounded_curve_rows(), tables.golden_bounded_curve_rows()
    ) == []


def test_catalog_matches_golden():
    assert tables.diff_tables(
        tables.catalog_rows(), tables.golden_catalog_rows()
    ) == []


def test_curve_table_pinned_columns():
    rows = tables.bounded_curve_rows()
    assert [r["max_mult"] for r in rows] == [6, 5, 4, 3, 4, 4, 3, 3, 2, 2]
    assert [r["auto_bound"] for r in rows] == [4, 3, 3, 2, 3, 2, 2, 2, 1, 1]
    assert [r["row"] for r in rows] == [
        "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"
    ]


def test_curve_table_known_pairs():
    rows = {r["row"]: r for r in tables.bounded_curve_rows()}
    assert rows["i"]["pairs"] == [[6, 2], [5, 4]]
    assert rows["x"]["pairs"] == [[2, 1]]
    assert rows["vi"]["pairs"] == [[4, 1], [3, 3]]


def test_curve_table_is_fast():
    t0 = time.time()
    for _ in range(5):
        tables.bounded_curve_rows()
    assert time.time() - t0 < 1.0


def test_diff_reports_discrepancies():
    computed = tables.bounded_curve_rows()
    broken = [dict(r) for r in computed]
    broken[0]["max_mult"] = 7
    problems = tables.diff_tables(broken, tables.golden_bounded_curve_rows())
    assert problems and "row i" in problems[0]


def test_renderers_cover_all_rows():
    text = tables.render_curve_table(tables.bounded_curve_rows())
    assert "(4,4)" in text and text.count("\n") >= 11
    text = tables.render_catalog(tables.catalog_rows())
    assert "Z4xZ2" in text and "2,3,6" in text
