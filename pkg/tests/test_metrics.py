from __future__ import annotations

import math
from fractions import Fraction as F

import pytest

from wfc.compose import Operator, compose
from wfc.errors import UndefinedForNet
from wfc.metrics import (
    DIMENSIONS,
    MEASURE_IDS,
    MEASURES,
    MetricConfig,
    cc_brute_force,
    compute_all,
)

STRICT = MetricConfig(undefined_policy="error")
NO_TAU_DUP = MetricConfig(dup_count_tau=False)


def value(mid, net, config=None):
    return MEASURES[mid](net, config) if config else MEASURES[mid](net)


def test_measure_registry_is_complete():
    assert set(MEASURE_IDS) == set(MEASURES) == set(DIMENSIONS)
    assert len(MEASURE_IDS) == 17


def test_w0_scores(w0):
    results = compute_all(w0)
    expected = {
        "size": 3, "mm": 0, "cc": F(1, 2), "ts": 0, "sep": 0, "cfc": 0,
        "mcd": 0, "seq": 0, "acd": 0, "depth": 0, "diam": 3, "cyc": 0,
        "cnc": F(2, 3), "dens": 1, "dup": 0, "esf": 0,
    }
    for mid, want in expected.items():
        assert results[mid].value == F(want), mid
    assert results["ch"].value == 0.0 and results["ch"].special_case_applied


def test_special_case_flags(fx, w0):
    for mid in ("ch", "mcd", "acd"):
        assert value(mid, w0).special_case_applied
        assert not value(mid, fx("W1_MM")).special_case_applied
    assert not value("size", w0).special_case_applied


def test_undefined_policy_error(w0, fx):
    for mid in ("ch", "mcd", "acd"):
        with pytest.raises(UndefinedForNet):
            value(mid, w0, STRICT)
        value(mid, fx("W1_MM"), STRICT)  # defined when connectors exist


def test_ch_entropy_value(fx):
    got = value("ch", fx("W1_CH")).value
    want = -(4 / 7 * math.log2(4 / 7) + 3 / 7 * math.log2(3 / 7))
    assert abs(got - want) < 1e-12


def test_mm_family_and_perm_scores(fx):
    assert value("mm", fx("W2_MM")).value == 4
    assert value("mm", fx("W4_MM")).value == 2
    assert value("mm", fx("W5_MM")).value == 0


def test_cc_examples(fx):
    assert value("cc", fx("W_and_CC")).value == F(34, 45)
    assert value("cc", fx("W4_CC")).value == F(13, 16)
    assert value("cc", fx("W3_CC")).value == F(1, 2)


def test_cc_brute_force_oracle_on_cyclic_net(fx):
    for name in ("W3_cyc", "W3_dens", "W7_sep"):
        net = fx(name)
        assert cc_brute_force(net) == value("cc", net).value


def test_depth_uses_min_of_in_and_out(fx):
    # every branch of Wsub3 is shallow in one direction
    assert value("depth", fx("Wsub3_depth")).value == 1
    assert value("depth", fx("W3_depth")).value == 2


def test_dup_tau_configuration(fx, w0):
    w0a = fx("W0_a")
    seq2 = compose(Operator.XOR, [w0a, w0a])
    assert value("dup", seq2).value == 4
    assert value("dup", seq2, NO_TAU_DUP).value == 1
    assert value("dup", w0).value == 0


def test_esf_examples(fx):
    assert value("esf", fx("W2_esf")).value == 2
    assert value("esf", fx("W4_esf")).value == 2
    assert value("esf", fx("W1_esf")).value == 0
    assert value("ts", fx("W2_esf")).value == 1


def test_compute_all_never_raises(fx):
    out = compute_all(fx("M_example"), STRICT)
    assert set(out) == set(MEASURE_IDS)
    assert all(not isinstance(v, Exception) for v in out.values())
    assert out["size"].value == 25


def test_compute_all_records_failures(w0):
    out = compute_all(w0, STRICT)
    assert isinstance(out["ch"], UndefinedForNet)
    assert out["size"].value == 3


def test_depth_loop_composition_formula(fx, w0):
    w3d = fx("W3_depth")
    assert value("depth", compose(Operator.LOOP, [w0, w3d])).value == 3  # max{0, 2+1}
    assert value("depth", compose(Operator.LOOP, [w3d, w0])).value == 2  # max{2, 0+1}
    assert value("depth", compose(Operator.PAR, [w0, w0])).value == 1


def test_diam_loop_composition_formula(fx, w0):
    chain5 = fx("W3_diam")
    assert value("diam", compose(Operator.LOOP, [chain5, w0])).value == 8 + 5
    assert value("diam", compose(Operator.SEQ, [w0, chain5])).value == 3 + 5 + 1


def test_value_ranges(fx):
    for name in ("W1_CH", "W8_CC", "M_example", "W3_cnc", "W4_ts"):
        net = fx(name)
        out = compute_all(net)
        assert 0 <= out["cc"].value < 1
        assert 0 <= out["ch"].value <= 1
        assert 0 <= out["sep"].value <= 1
        assert 0 <= out["seq"].value <= 1
        assert 0 <= out["cyc"].value <= 1
        assert out["cnc"].value >= F(2, 3)
        assert 0 < out["dens"].value <= 1
