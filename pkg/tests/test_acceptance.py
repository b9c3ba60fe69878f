"""Acceptance suite: one test per criterion, each printing a PASS line.

Criteria:
  1. figure-value golden suite over the transcribed fixture catalog
  2. family closed forms over small parameter grids
  3. composition identities and subadditivity on seeded random block nets
  4. full verdict-table reproduction at budget 200, seed 0
  5. oracle equivalence for the max-product closure and articulation points
  6. bounded-language reproduction of the quoted trace sets
  7. structural property sweep over 1000 random block nets
"""

from __future__ import annotations

import time
from fractions import Fraction as F


from wfc.compose import Operator, compose, relabel
from wfc.generators import RandomNetSpec, build_family, build_fixture, fixture_names, random_block_net
from wfc.graphs import (
    LanguageBounds,
    articulation_points,
    bounded_language,
    max_product_values,
    undirected_skeleton,
)
from wfc.metrics import MEASURES, cc_brute_force, cc_weights
from wfc.properties import HarnessConfig, compare_to_expected, full_report, load_expected_table


def _stamp(name: str, started: float, limit: float) -> None:
    elapsed = time.monotonic() - started
    print(f"\n{name}: PASS ({elapsed:.2f}s, limit {limit:.0f}s)")
    assert elapsed < limit, f"{name} exceeded its {limit}s budget ({elapsed:.2f}s)"


# --- criterion 1: figure-value golden suite -------------------------------------

GOLDEN = [
    ("W0", "size", 3), ("W0", "cnc", F(2, 3)), ("W0", "diam", 3), ("W0", "dens", 1),
    ("W0", "cc", F(1, 2)), ("W0", "sep", 0), ("W0", "depth", 0), ("W0", "seq", 0),
    ("W0", "mm", 0), ("W0", "ts", 0), ("W0", "cfc", 0), ("W0", "mcd", 0),
    ("W0", "acd", 0), ("W0", "cyc", 0), ("W0", "dup", 0), ("W0", "esf", 0),
    ("W1_size", "size", 3), ("W2_size", "size", 5), ("W3_size", "size", 5),
    ("W4_size", "size", 6), ("M_example", "size", 25),
    ("W1_MM", "mm", 0), ("W2_MM", "mm", 4), ("W3_MM", "mm", 4),
    ("W4_MM", "mm", 2), ("W5_MM", "mm", 0),
    ("W1_CH", "ch", 0.9852), ("W2_CH", "ch", 0.0), ("W3_CH", "ch", 0.0),
    ("W4_CH", "ch", 0.9183), ("W5_CH", "ch", 0.9183), ("W6_CH", "ch", 1.0),
    ("W7_CH", "ch", 0.9183),
    ("W_and_CC", "cc", F(34, 45)),            # 0.755...
    ("W2_CC", "cc", F(1, 2)), ("W3_CC", "cc", F(1, 2)), ("W4_CC", "cc", F(13, 16)),
    ("W7_CC", "cc", F(1, 2)),
    ("W1_ts", "ts", 1), ("W2_ts", "ts", 2), ("W3_ts", "ts", 1), ("W4_ts", "ts", 2),
    ("W1_sep", "sep", 0), ("W2_sep", "sep", 1), ("W3_sep", "sep", 0),
    ("W7_sep", "sep", F(1, 4)), ("W8_sep", "sep", F(1, 4)),
    ("W9_sep", "sep", F(1, 4)), ("W10_sep", "sep", F(1, 2)), ("W6_sep", "sep", 1),
    ("W1_cfc", "cfc", 0), ("W2_cfc", "cfc", 2), ("W3_cfc", "cfc", 2),
    ("wfmax1", "mcd", 2), ("wfmax2", "mcd", 3), ("wfmax3", "mcd", 3),
    ("wfmax4", "mcd", 3), ("wfmax5", "mcd", 4),
    ("wfseq1", "seq", F(5, 6)), ("wfseq2", "seq", F(1, 2)),
    ("wfseq6", "seq", 1), ("wfseq7", "seq", F(7, 8)),
    ("wfavg1", "acd", 2), ("wfavg2", "acd", 3), ("wfavg3", "acd", 3),
    ("wfavg7", "acd", F(8, 3)), ("wfavg8", "acd", F(7, 2)),
    ("W1_depth", "depth", 1), ("W2_depth", "depth", 1), ("W3_depth", "depth", 2),
    ("W5_depth", "depth", 2), ("W6_depth", "depth", 1),
    ("W1_diam", "diam", 3), ("W2_diam", "diam", 3), ("W3_diam", "diam", 5),
    ("W4_diam", "diam", 7), ("W5_diam", "diam", 9),
    ("W1_cyc", "cyc", 0), ("W2_cyc", "cyc", 0), ("W3_cyc", "cyc", F(1, 3)),
    ("W4_cyc", "cyc", F(1, 3)), ("W5_cyc", "cyc", 0),
    ("W1_cnc", "cnc", F(2, 3)), ("W2_cnc", "cnc", 1), ("W3_cnc", "cnc", F(8, 5)),
    ("W1_dens", "dens", 1), ("W2_dens", "dens", F(1, 2)),
    ("W3_dens", "dens", F(1, 2)), ("W4_dens", "dens", F(1, 3)),
    ("W1_dup", "dup", 0), ("W2_dup", "dup", 2), ("W3_dup", "dup", 0),
    ("W1_esf", "esf", 0), ("W2_esf", "esf", 2), ("W2_esf", "ts", 1),
    ("W3_esf", "esf", 0), ("W4_esf", "esf", 2),
]


def test_criterion_1_figure_value_golden_suite():
    started = time.monotonic()
    nets = {}
    failures = []
    for name, measure, want in GOLDEN:
        net = nets.setdefault(name, build_fixture(name))
        got = MEASURES[measure](net).value
        if isinstance(want, float):
            ok = abs(float(got) - want) < 1e-4
        else:
            ok = got == F(want)
        if not ok:
            failures.append((name, measure, want, got))
    # the W_and figure also states the block-restricted connection values of
    # its two operand regions: 0.8796 and 0.5
    net = nets["W_and_CC"]
    values = max_product_values(net, cc_weights(net))
    w1_block = ["p1", "t2", "t3", "p3"]
    s1 = sum(values[(a, b)] for a in w1_block for b in w1_block)
    if abs(float(1 - F(s1, 12)) - 0.8796) > 1e-4:
        failures.append(("W_and_CC", "cc block W1", 0.8796, 1 - F(s1, 12)))
    w2_block = ["p2", "t4", "p4"]
    s2 = sum(values[(a, b)] for a in w2_block for b in w2_block)
    if 1 - F(s2, 6) != F(1, 2):
        failures.append(("W_and_CC", "cc block W2", F(1, 2), 1 - F(s2, 6)))
    assert len(nets) >= 30
    assert not failures, failures
    _stamp("criterion 1 (figure values)", started, 10)


# --- criterion 2: family closed forms ----------------------------------------------

def test_criterion_2_family_closed_forms():
    from wfc.generators import FAMILIES, family_score

    started = time.monotonic()
    grids = {
        "mm": [dict(c=c, k=k) for c in range(1, 6) for k in range(1, 5)],
        "ch": [dict(k=k, n=n) for k in range(1, 4) for n in range(2, 7)],
        "cc_fin": [dict(k=k) for k in range(1, 7)],
        "cc_min": [dict(k=k) for k in range(1, 7)],
        "ts": [dict(c=c, k=k) for c in range(1, 6) for k in range(1, 4)],
        "cfc": [dict(c=c, k=k) for c in range(2, 7) for k in range(1, 4)],
        "mcd": [dict(c=c, n=n) for c in range(1, 4) for n in range(2, 7)],
        "seq": [dict(c=c, k=k) for c in range(1, 5) for k in range(1, 6)],
        "acd": [dict(c=c, k=k) for c in range(2, 7) for k in range(1, 4)],
        "sep": [dict(n=n, m=m) for n in range(1, 6) for m in range(1, 6)],
        "depth_ladder": [dict(n=n) for n in range(1, 7)],
        "diam_chain": [dict(k=k) for k in range(1, 7)],
        "cyc_loop": [dict(k=k) for k in range(2, 7)],
        "cyc_dense": [dict(k=k) for k in range(1, 7)],
        "cnc_one": [dict(k=k) for k in range(1, 7)],
        "cnc_chain": [dict(k=k) for k in range(1, 7)],
        "dens_fan": [dict(k=k) for k in range(1, 7)],
        "dens_chain": [dict(k=k) for k in range(1, 7)],
        "dup_chain": [dict(c=c) for c in range(0, 7)],
        "esf": [dict(n=n, k=k) for n in range(1, 4) for k in range(2, 7)],
    }
    assert set(grids) == set(FAMILIES)
    failures = []
    for name, grid in grids.items():
        family = FAMILIES[name]
        for params in grid:
            got = MEASURES[family.measure](build_family(name, **params)).value
            want = family_score(name, **params)
            if isinstance(want, float):
                ok = abs(float(got) - want) < 1e-12
            else:
                ok = got == want
            if not ok:
                failures.append((name, params, want, got))
    assert not failures, failures
    _stamp("criterion 2 (family closed forms)", started, 10)


# --- criterion 3: composition theorem suite ------------------------------------------

def test_criterion_3_composition_theorems():
    started = time.monotonic()
    nets = [random_block_net(RandomNetSpec(seed=5000 + i, max_leaves=4)) for i in range(200)]
    pairs = [(nets[2 * i], nets[2 * i + 1]) for i in range(100)]
    violations = []

    def val(measure, net):
        return MEASURES[measure](net).value

    for index, (a, b) in enumerate(pairs):
        parts = {m: (val(m, a), val(m, b)) for m in
                 ("size", "ts", "cfc", "esf", "diam", "mm", "cnc", "dens", "cyc")}
        for op in Operator:
            comp = compose(op, [a, b])
            got = {m: val(m, comp) for m in parts}
            s = {m: parts[m][0] + parts[m][1] for m in parts}
            identity = {
                Operator.SEQ: got["size"] == s["size"] + 1,
                Operator.PAR: got["size"] == s["size"] + 4,
                Operator.XOR: got["size"] == s["size"] + 6,
                Operator.LOOP: got["size"] == s["size"] + 10,
            }[op]
            ts_ok = got["ts"] == (s["ts"] + 1 if op is Operator.PAR else s["ts"])
            cfc_extra = {Operator.SEQ: 0, Operator.PAR: 1, Operator.XOR: 2, Operator.LOOP: 2}[op]
            cfc_ok = got["cfc"] == s["cfc"] + cfc_extra
            esf_ok = got["esf"] == s["esf"]
            diam_ok = {
                Operator.SEQ: got["diam"] == s["diam"] + 1,
                Operator.PAR: got["diam"] == max(parts["diam"]) + 4,
                Operator.XOR: got["diam"] == max(parts["diam"]) + 4,
                Operator.LOOP: got["diam"] == parts["diam"][0] + 8,
            }[op]
            mm_ok = got["mm"] <= s["mm"]
            cnc_ok = got["cnc"] < s["cnc"]
            dens_ok = got["dens"] < s["dens"]
            cyc_ok = True
            if op is not Operator.LOOP:
                cyc_ok = got["cyc"] <= s["cyc"] and (s["cyc"] == 0 or got["cyc"] < s["cyc"])
            for label, ok in [("size", identity), ("ts", ts_ok), ("cfc", cfc_ok),
                              ("esf", esf_ok), ("diam", diam_ok), ("mm", mm_ok),
                              ("cnc", cnc_ok), ("dens", dens_ok), ("cyc", cyc_ok)]:
                if not ok:
                    violations.append((index, op.value, label))
    assert not violations, violations[:10]
    _stamp("criterion 3 (composition theorems, 200 nets)", started, 60)


# --- criterion 4: verdict table reproduction ------------------------------------------

def test_criterion_4_table_reproduction():
    started = time.monotonic()
    report = full_report(HarnessConfig(search_budget=200, seed=0))
    mismatches = compare_to_expected(report, load_expected_table())
    assert mismatches == [], [str(m) for m in mismatches]
    _stamp("criterion 4 (table reproduction, budget 200)", started, 300)


# --- criterion 5: oracle equivalence ----------------------------------------------------

def _brute_cuts(net):
    adj = undirected_skeleton(net)

    def connected_without(removed):
        nodes = [n for n in adj if n != removed]
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt != removed and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(nodes)

    return frozenset(n for n in adj if not connected_without(n))


def test_criterion_5_oracle_equivalence():
    started = time.monotonic()
    nets = [(name, build_fixture(name)) for name in fixture_names()]
    small_random = []
    seed = 0
    while len(small_random) < 100:
        net = random_block_net(RandomNetSpec(seed=9000 + seed, max_leaves=2))
        seed += 1
        if len(net.nodes) <= 12:
            small_random.append((f"random[{seed}]", net))
    discrepancies = []
    for name, net in nets + small_random:
        if cc_brute_force(net) != MEASURES["cc"](net).value:
            discrepancies.append((name, "cc"))
        if articulation_points(net) != _brute_cuts(net):
            discrepancies.append((name, "articulation"))
    assert not discrepancies, discrepancies
    _stamp("criterion 5 (oracle equivalence)", started, 60)


# --- criterion 6: language suite ----------------------------------------------------------

def test_criterion_6_language_suite():
    started = time.monotonic()
    cases = [
        ("W0_a", {(), ("a",)}),
        ("W1_size", {(), ("a",)}),
        ("W2_size", {(), ("a",)}),
        ("W1_CH", {(), ("a",), ("b",), ("a", "c"), ("b", "d")}),
        ("W2_CH", {(), ("a",), ("b",), ("a", "c"), ("b", "d")}),
        ("W1_MM", {(), ("a",), ("b",)}),
        ("W2_MM", {(), ("a",), ("b",)}),
        ("W1_ts", {(), ("a",), ("a", "b"), ("a", "b", "c"), ("a", "b", "d"),
                   ("a", "b", "c", "d"), ("a", "b", "d", "c"),
                   ("a", "b", "c", "d", "e"), ("a", "b", "d", "c", "e")}),
        ("W2_ts", {(), ("a",), ("a", "b"), ("a", "b", "c"), ("a", "b", "d"),
                   ("a", "b", "c", "d"), ("a", "b", "d", "c"),
                   ("a", "b", "c", "d", "e"), ("a", "b", "d", "c", "e")}),
        ("W2_depth", {(), ("a",), ("b",), ("c",)}),
        ("W3_depth", {(), ("a",), ("b",), ("c",)}),
        ("W2_cyc", {(), ("a",), ("a", "b")}),
        ("W3_cyc", {(), ("a",), ("a", "b")}),
        ("W1_esf", {(), ("a",), ("a", "b")}),
        ("W2_esf", {(), ("a",), ("a", "b")}),
    ]
    for name, want in cases:
        language, truncated = bounded_language(build_fixture(name), LanguageBounds())
        assert not truncated, name
        assert language == frozenset(want), name
    _stamp("criterion 6 (language suite)", started, 5)


# --- criterion 7: structural property sweep -------------------------------------------------

STRUCTURAL = [m for m in MEASURES if m != "dup"]


def test_criterion_7_structural_sweep():
    started = time.monotonic()
    violations = []
    for i in range(1000):
        net = random_block_net(RandomNetSpec(seed=31_000 + i, max_leaves=4))
        values = {m: MEASURES[m](net).value for m in MEASURES}
        if not (values["cnc"] >= F(2, 3)):
            violations.append((i, "cnc"))
        if not (0 <= values["cc"] < 1):
            violations.append((i, "cc"))
        labels = sorted(net.visible_labels())
        if labels:
            mapping = {l: labels[(j + 1) % len(labels)] for j, l in enumerate(labels)}
            if len(labels) == 1:
                mapping = {labels[0]: "zz"}
            renamed = relabel(net, mapping)
            for m in STRUCTURAL:
                other = MEASURES[m](renamed).value
                same = (abs(float(values[m]) - float(other)) < 1e-12
                        if isinstance(values[m], float) else values[m] == other)
                if not same:
                    violations.append((i, m))
        if MEASURES["dup"](net).value != MEASURES["dup"](relabel(net, {})).value:
            violations.append((i, "dup"))
    assert not violations, violations[:10]
    _stamp("criterion 7 (structural sweep, 1000 nets)", started, 60)
