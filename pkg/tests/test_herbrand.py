import json
import pathlib

import pytest

from coverzeta import (
    VoltageSpec,
    bouquet,
    build_report,
    bundled_spec,
    derive,
    verify_fitting_identity,
    verify_main11,
    verify_main22,
)
from coverzeta.herbrand import PASS, SKIPPED, CoverAnalysis, default_precision
from coverzeta.picard import picard_module

GOLDENS = pathlib.Path(__file__).parent / "goldens"


def test_main22_passes_on_examples(ex1_cover, ex2_cover, ex3_cover):
    for cover in (ex1_cover, ex2_cover, ex3_cover):
        verdicts = verify_main22(cover)
        assert all(v.status == PASS for v in verdicts.values())


def test_main22_matches_worked_orders(ex2_cover, ex3_cover):
    v2 = verify_main22(ex2_cover)
    assert set(v2) == {1, 2, 3}
    assert "5" in v2[2].reason
    v3 = verify_main22(ex3_cover)
    assert set(v3) == set(range(1, 10))
    assert "121" in v3[1].reason and "121" in v3[9].reason


def test_main11_passes_and_locates_vanishing(ex3_cover, ex4_cover):
    v3 = verify_main11(ex3_cover)
    assert all(v.status == PASS for v in v3.values())
    a3 = CoverAnalysis(ex3_cover)
    assert {i for i in range(1, 10) if a3.fp_value(i) == 0} == {1, 9}
    assert {i: a3.dim_C(i) for i in range(1, 10) if a3.dim_C(i)} == {1: 1, 9: 1}
    a4 = CoverAnalysis(ex4_cover)
    assert {i for i in range(1, 10) if a4.fp_value(i) == 0} == {3, 7}
    assert {i: a4.dim_C(i) for i in range(1, 10) if a4.dim_C(i)} == {3: 2, 7: 2}


def test_fitting_identity_on_examples(ex1_cover, ex2_cover):
    assert verify_fitting_identity(ex1_cover).status == PASS
    assert verify_fitting_identity(ex2_cover).status == PASS


def test_fitting_identity_skips_disconnected():
    cover = derive(VoltageSpec(bouquet(2), 5, (1, 1)))
    verdict = verify_fitting_identity(cover)
    assert verdict.status == SKIPPED
    assert "disconnected" in verdict.reason


def test_default_precision_rule(ex2_cover, ex3_cover):
    assert default_precision(picard_module(ex2_cover)) == 3  # 5-part order 5
    assert default_precision(picard_module(ex3_cover)) == 6  # 11-part order 11^4


def test_reports_are_deterministic(ex2_cover):
    assert build_report(ex2_cover).to_json() == build_report(ex2_cover).to_json()


@pytest.mark.parametrize("name", ["example1", "example2", "example3", "example4"])
def test_reports_match_goldens(name):
    cover = derive(bundled_spec(name))
    got = build_report(cover).to_json()
    want = (GOLDENS / f"{name}_report.json").read_text()
    assert got == want


def test_report_contents_fourth_example(ex4_cover):
    report = build_report(ex4_cover)
    assert report.pic0 == (11, 11, 1353, 27060)
    assert report.sylow_factors == (11, 11, 11, 11)
    assert report.dim_C == 4
    assert [row["h_mod_p"] for row in report.rows] == [5, 5, 0, 8, 3, 8, 0, 5, 5]
    assert [row["dimC"] for row in report.rows] == [0, 0, 2, 0, 0, 0, 2, 0, 0]
    assert report.strict_dimension_inequality  # dim C = 4 > 0 + 2
    assert report.all_ok


def test_report_main22_main11_rows_consistent(ex3_cover):
    report = build_report(ex3_cover)
    for row in report.rows:
        assert (row["orderA"] > 1) == (row["dimC"] > 0)
        assert (row["valuation"] > 0) == (row["h_mod_p"] == 0)


def test_report_renders_padic_expansions(ex3_cover):
    report = build_report(ex3_cover)
    assert report.rows[0]["h_padic"].startswith("2*11^2 + 7*11^3 + 9*11^4")


def test_precision_retry_recovers(ex3_cover):
    # Start below the valuation of the interesting L-values; the doubling
    # retry must land on a sufficient precision and still pass everywhere.
    report = build_report(ex3_cover, precision=1)
    assert report.all_ok
    assert [row["valuation"] for row in report.rows] == [2, 0, 0, 0, 0, 0, 0, 0, 2]


def test_table_rendering(ex3_cover):
    table = build_report(ex3_cover).format_table()
    lines = table.strip().splitlines()
    assert len(lines) == 2 + 9
    assert lines[2].split("|")[0].strip() == "1"
    body = [line.split("|") for line in lines[2:]]
    assert [int(cells[1]) for cells in body] == [1, 0, 0, 0, 0, 0, 0, 0, 1]
    assert [int(cells[2]) for cells in body] == [0, 9, 2, 1, 8, 1, 2, 9, 0]


def test_json_schema_keys(ex2_cover):
    doc = json.loads(build_report(ex2_cover).to_json())
    assert set(doc["global"]) >= {"main11", "main22", "fitting", "duality", "dim_inequality"}
    for row in doc["rows"]:
        assert set(row) == {
            "i",
            "dimC",
            "h_mod_p",
            "orderA",
            "valuation",
            "h_padic",
            "verdicts",
        }
    assert {"p", "voltages", "base_vertices", "total_vertices"} <= set(doc["cover"])


def test_failed_report_carries_diagnostics(ex2_cover, monkeypatch):
    import coverzeta.herbrand as hb

    monkeypatch.setattr(hb, "duality_check", lambda cover, precision=2: False)
    report = build_report(ex2_cover)
    assert not report.all_ok
    assert report.diagnostics is not None
    assert "invariant_factors" in report.diagnostics
