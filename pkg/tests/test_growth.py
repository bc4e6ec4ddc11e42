import math

import pytest

from rfgrowth.detect import ANY, NILPOTENT, Detector, PropertyClass
from rfgrowth.families import FreeFamily, IntegerLineFamily, LamplighterFamily, get_family
from rfgrowth.growth import (
    growth_F,
    growth_table,
    inequality3_check,
    integer_line_reference,
    loglog_fit,
    minimal_nondivisor,
    table_export,
    table_parse,
    word_growth,
)

FREE2 = FreeFamily(2)
LINE = IntegerLineFamily()


def test_growth_at_zero_is_one(catalog16, detector):
    rec = growth_F(FREE2, ANY, 0, catalog16, detector)
    assert rec.value == 1
    assert rec.exact
    assert rec.witness is None


def test_free2_growth_small_values(catalog16, detector):
    assert growth_F(FREE2, ANY, 1, catalog16, detector).value == 2
    rec2 = growth_F(FREE2, ANY, 2, catalog16, detector)
    assert rec2.value == 3
    assert rec2.witness == "x x"
    rec4 = growth_F(FREE2, ANY, 4, catalog16, detector)
    assert rec4.value == 6
    assert rec4.exact


def test_growth_unresolved_becomes_lower_bound(catalog16):
    small = Detector(catalog16)
    # with the catalog capped at order 2 nothing detects x^2
    from rfgrowth.catalog import catalog_build

    cat2 = catalog_build(2, maximum=2)
    rec = growth_F(FREE2, ANY, 2, cat2)
    assert rec.value == 3  # bound + 1, certified lower bound
    assert not rec.exact
    assert rec.witness == "x x"
    assert rec.witness_order is None


def test_growth_jobs_parallel_matches_serial(catalog16, detector):
    serial = growth_F(FREE2, ANY, 3, catalog16, detector)
    parallel = growth_F(FREE2, ANY, 3, catalog16, detector, jobs=4)
    assert (serial.value, serial.exact, serial.witness) == (
        parallel.value,
        parallel.exact,
        parallel.witness,
    )


def test_word_growth_counts():
    assert word_growth(FREE2, 0) == 1
    assert word_growth(FREE2, 2) == 17
    assert word_growth(LamplighterFamily(2), 1) == 4


def test_minimal_nondivisor():
    assert minimal_nondivisor(1) == 2
    assert minimal_nondivisor(2) == 3
    assert minimal_nondivisor(6) == 4
    assert minimal_nondivisor(12) == 5
    assert minimal_nondivisor(840) == 9  # 840 = 2^3 * 3 * 5 * 7, so 8 divides it


def test_integer_line_reference_matches_growth(catalog16, detector):
    for n in range(1, 20):
        rec = growth_F(LINE, ANY, n, catalog16, detector)
        assert rec.exact
        assert rec.value == integer_line_reference(n), "n=%d" % n


def test_growth_table_rows_and_config(catalog16, detector):
    table = growth_table(LINE, ANY, 5, catalog16, detector)
    assert [r.n for r in table.rows] == [1, 2, 3, 4, 5]
    assert table.config["family"] == "z"
    assert table.config["prop"] == "any"
    assert table.config["nmax"] == 5
    assert table.resolved_rows() == table.rows


def test_growth_table_extra_config(catalog16, detector):
    table = growth_table(LINE, ANY, 1, catalog16, detector, extra_config={"run": 1})
    assert table.config["run"] == 1


def test_table_export_csv_roundtrip(catalog16, detector):
    table = growth_table(LINE, ANY, 4, catalog16, detector)
    text = table_export(table, "csv")
    assert text.startswith("# config ")
    back = table_parse(text, "csv")
    assert back.rows == table.rows
    assert back.config == table.config


def test_table_export_json_roundtrip(catalog16, detector):
    table = growth_table(FREE2, NILPOTENT, 2, catalog16, detector)
    text = table_export(table, "json")
    back = table_parse(text, "json")
    assert back.rows == table.rows
    assert back.config == table.config


def test_table_export_handles_unresolved_rows(catalog16):
    from rfgrowth.catalog import catalog_build

    cat2 = catalog_build(2, maximum=2)
    table = growth_table(FREE2, ANY, 2, cat2)
    for fmt in ("csv", "json"):
        back = table_parse(table_export(table, fmt), fmt)
        assert back.rows == table.rows
        assert not back.rows[-1].exact
        assert back.rows[-1].witness_order is None


def test_table_parse_rejects_bad_header():
    with pytest.raises(ValueError):
        table_parse("# config {}\nbogus,header\n", "csv")
    with pytest.raises(ValueError):
        table_export(None, "xml")


def test_inequality3_rows(catalog16, detector):
    for n in (0, 1, 2):
        row = inequality3_check(n, catalog16, FREE2, detector)
        assert not row.inconclusive
        assert row.holds
        assert row.lhs <= row.rhs + 1e-12


def test_inequality3_known_quantities(catalog16, detector):
    row0 = inequality3_check(0, catalog16, FREE2, detector)
    assert row0.word_count == 1
    assert row0.lhs == 0.0
    row1 = inequality3_check(1, catalog16, FREE2, detector)
    assert row1.word_count == 5
    assert row1.f_record.value == 3
    assert row1.subgroup_count == 4  # normal subgroups of index F(2) = 3
    row2 = inequality3_check(2, catalog16, FREE2, detector)
    assert row2.word_count == 17
    assert row2.f_record.value == 6
    assert row2.subgroup_count == 15
    assert math.isclose(row2.lhs, math.log(17.0))
    assert math.isclose(row2.rhs, 15 * math.log(6.0))


def test_loglog_fit_on_line_table(catalog16, detector):
    table = growth_table(LINE, ANY, 30, catalog16, detector)
    fit = loglog_fit(table)
    assert fit.used >= 20
    assert 0.2 < fit.slope < 0.6
    assert fit.label == "diagnostic"


def test_loglog_fit_needs_enough_rows(catalog16, detector):
    table = growth_table(LINE, ANY, 2, catalog16, detector)
    with pytest.raises(ValueError):
        loglog_fit(table)


def test_growth_via_family_tag_smoke(catalog16, detector):
    fam = get_family("lamp2")
    rec = growth_F(fam, ANY, 1, catalog16, detector)
    assert rec.value == 2
    assert rec.exact
