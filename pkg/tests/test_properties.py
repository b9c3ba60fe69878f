from __future__ import annotations

import json

import pytest

from wfc.metrics import MEASURE_IDS
from wfc.properties import (
    CONFIRMED,
    EXISTENTIAL,
    FALSIFIED,
    NOT_FALSIFIED,
    OPERATOR_SCOPED,
    PROPERTY_IDS,
    THEOREM,
    Harness,
    HarnessConfig,
    check,
    compare_to_expected,
    full_report,
    load_expected_table,
)

SMALL = HarnessConfig(search_budget=12, seed=0)


@pytest.fixture(scope="module")
def report():
    return full_report(SMALL)


@pytest.fixture(scope="module")
def expected():
    return load_expected_table()


def test_expected_table_covers_grid(expected):
    assert set(expected) == set(MEASURE_IDS)
    for row in expected.values():
        assert set(row) == set(PROPERTY_IDS)


def test_report_reproduces_expected_tables(report, expected):
    mismatches = compare_to_expected(report, expected)
    assert mismatches == []


def test_single_flipped_cell_yields_one_mismatch(report, expected):
    tampered = json.loads(json.dumps(expected))
    tampered["size"]["w1"] = "no"
    mismatches = compare_to_expected(report, tampered)
    assert len(mismatches) == 1
    assert mismatches[0].measure == "size" and mismatches[0].prop == "w1"


def test_flipped_operator_subcell(report, expected):
    tampered = json.loads(json.dumps(expected))
    tampered["ts"]["w9"]["par"] = "no"
    mismatches = compare_to_expected(report, tampered)
    assert len(mismatches) == 1
    assert mismatches[0].operator == "par"


def test_size_w1_confirmed_by_witness():
    verdict = check("size", "w1", SMALL)
    assert verdict.status == CONFIRMED
    assert any("3" in line and "5" in line for line in verdict.evidence)


def test_mm_w5_falsified_by_paper_witness():
    verdict = check("mm", "w5", SMALL)
    assert verdict.status == FALSIFIED
    assert all(status == FALSIFIED for status in verdict.per_operator.values())
    assert any("C=0" in line for line in verdict.evidence)


def test_esf_additive_theorem_verified():
    verdict = check("esf", "additive", SMALL)
    assert verdict.status == THEOREM
    assert set(verdict.per_operator.values()) == {THEOREM}


def test_cc_minimum_falsified():
    verdict = check("cc", "minimum", SMALL)
    assert verdict.status == FALSIFIED
    assert "decrease" in verdict.evidence[0]


def test_size_minimum_confirmed(report):
    verdict = report.cell("size", "minimum")
    assert verdict.status == CONFIRMED
    assert "W0" in verdict.evidence[0]


def test_dup_w7_not_falsified(report):
    verdict = report.cell("dup", "w7")
    assert verdict.status == NOT_FALSIFIED
    assert verdict.info


def test_defined_falsified_only_for_special_case_measures(report):
    for measure in MEASURE_IDS:
        status = report.cell(measure, "defined").status
        if measure in ("ch", "mcd", "acd"):
            assert status == FALSIFIED
        else:
            assert status == NOT_FALSIFIED


def test_w2_padding_families(report):
    assert report.cell("cc", "w2").status == FALSIFIED
    assert report.cell("size", "w2").status == NOT_FALSIFIED
    assert report.cell("dup", "w2").status == NOT_FALSIFIED


def test_inf_confirmed_everywhere(report):
    for measure in MEASURE_IDS:
        assert report.cell(measure, "inf").status == CONFIRMED


def test_operator_detail_present(report):
    for prop in OPERATOR_SCOPED:
        for measure in MEASURE_IDS:
            verdict = report.cell(measure, prop)
            assert verdict.per_operator is not None
            assert set(verdict.per_operator) == {"seq", "par", "xor", "loop"}


def test_ts_w9_split_matches_table(report):
    per_op = report.cell("ts", "w9").per_operator
    assert per_op["par"] == CONFIRMED
    assert per_op["seq"] in (NOT_FALSIFIED, THEOREM)
    assert per_op["xor"] in (NOT_FALSIFIED, THEOREM)


def test_diam_w5_loop_falsified(report):
    per_op = report.cell("diam", "w5").per_operator
    assert per_op["loop"] == FALSIFIED
    assert per_op["seq"] == THEOREM


def test_sep_w5_carries_weakened_reading_note(report):
    verdict = report.cell("sep", "w5")
    assert verdict.info and "weaken" in verdict.info


def test_verdicts_monotone_in_budget():
    tiny = full_report(HarnessConfig(search_budget=0, seed=0))
    larger = full_report(HarnessConfig(search_budget=25, seed=0))
    for measure in MEASURE_IDS:
        for prop in PROPERTY_IDS:
            small_status = tiny.cell(measure, prop).status
            big_status = larger.cell(measure, prop).status
            if small_status in (CONFIRMED, FALSIFIED):
                assert big_status == small_status, (measure, prop)


def test_budget_zero_matches_expected(expected):
    report = full_report(HarnessConfig(search_budget=0, seed=0))
    mismatches = compare_to_expected(report, expected)
    # every verdict is witness- or family-driven, so no search budget is needed
    assert mismatches == []


def test_w8_invariance_sample(report):
    for measure in MEASURE_IDS:
        verdict = report.cell(measure, "w8")
        assert verdict.status == NOT_FALSIFIED
        assert verdict.budget_used > 0


def test_report_text_and_json_forms(report):
    text = report.to_text()
    assert "size" in text and "notsup" in text
    payload = json.loads(report.to_json())
    assert len(payload["cells"]) == len(MEASURE_IDS) * len(PROPERTY_IDS)


def test_harness_existential_universal_partition():
    assert set(EXISTENTIAL) < set(PROPERTY_IDS)
    assert "w5" not in EXISTENTIAL and "w8" not in EXISTENTIAL


def test_check_rejects_unknown_ids():
    with pytest.raises(KeyError):
        check("nope", "w1", SMALL)
    with pytest.raises(KeyError):
        check("size", "w99", SMALL)


def test_report_deterministic_for_seed():
    first = full_report(HarnessConfig(search_budget=10, seed=5))
    second = full_report(HarnessConfig(search_budget=10, seed=5))
    assert first.to_dict() == second.to_dict()


def test_harness_value_cache_consistency(w0):
    harness = Harness(SMALL)
    first = harness.value("cc", w0)
    second = harness.value("cc", w0)
    assert first == second == harness.value("cc", harness.fixture("W0"))
