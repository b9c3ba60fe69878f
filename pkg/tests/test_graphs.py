from __future__ import annotations

from fractions import Fraction as F

import pytest

from wfc.errors import BudgetExceeded, StateBudgetExceeded
from wfc.graphs import (
    LanguageBounds,
    PathBudget,
    articulation_points,
    bounded_language,
    longest_trail,
    max_product_values,
    nodes_on_cycles,
    simple_paths,
    undirected_skeleton,
)
from wfc.metrics import cc_weights
from wfc.net import validate


def brute_force_cuts(net):
    """Remove-one-node connectivity oracle on the skeleton."""
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


def test_articulation_examples(fx, w0):
    assert articulation_points(w0) == {"t"}
    assert articulation_points(fx("W2_sep")) == frozenset()
    assert articulation_points(fx("W7_sep")) == {"t1", "p1", "t2"}


def test_articulation_matches_brute_force(fx):
    for name in ("W0", "W7_sep", "W8_sep", "W3_cnc", "W4_ts", "M_example", "W3_dens"):
        net = fx(name)
        assert articulation_points(net) == brute_force_cuts(net)


def test_skeleton_collapses_antiparallel_arcs(fx):
    loopy = fx("W7_sep")  # t3 and p1 are joined by two antiparallel arcs
    assert loopy.degree("t3") == 2
    assert undirected_skeleton(loopy)["t3"] == {"p1"}


def test_nodes_on_cycles(fx, w0):
    assert nodes_on_cycles(fx("W2_cyc")) == frozenset()
    assert nodes_on_cycles(fx("W3_cyc")) == {"p1", "t3"}
    assert nodes_on_cycles(w0) == frozenset()


def test_simple_paths_examples(fx, w0):
    assert list(simple_paths(w0, "pi", "po")) == [("pi", "t", "po")]
    assert list(simple_paths(w0, "po", "pi")) == []
    three_branch = fx("wfmax2")
    assert len(list(simple_paths(three_branch, "pi", "po"))) == 3


def test_simple_paths_budget():
    net = validate(*_diamond_chain(6))
    budget = PathBudget(max_enumerated_paths=3, on_exceed="error")
    with pytest.raises(BudgetExceeded):
        list(simple_paths(net, net.source, net.sink, budget))
    saturating = PathBudget(max_enumerated_paths=3, on_exceed="saturate")
    assert len(list(simple_paths(net, net.source, net.sink, saturating))) == 3


def _diamond_chain(k):
    """k xor diamonds in sequence: 2^k simple paths."""
    places, trans, arcs = ["s0"], [], []
    for i in range(k):
        for branch in "ab":
            trans.append(f"{branch}{i}")
            arcs.append((f"s{i}", f"{branch}{i}"))
            arcs.append((f"{branch}{i}", f"s{i + 1}"))
        places.append(f"s{i + 1}")
    return places, trans, arcs


def test_max_product_values_table(fx):
    net = fx("W_and_CC")
    values = max_product_values(net, cc_weights(net))
    assert values[("pi", "p1")] == F(1, 3)
    assert values[("pi", "p3")] == F(1, 9)
    assert values[("pi", "po")] == 1
    assert values[("t2", "p3")] == F(1, 3)
    assert values[("p1", "po")] == F(1, 9)
    assert all(values[("po", v)] == 0 for v in net.nodes)
    assert all(values[(v, "pi")] == 0 for v in net.nodes)


def test_max_product_all_ones_chain(fx):
    net = fx("W7_CC")
    values = max_product_values(net, {n: F(1) for n in net.nodes})
    order = ["pi", "t1", "p1", "t2", "p2", "t3", "po"]
    for i, u in enumerate(order):
        for j, v in enumerate(order):
            assert values[(u, v)] == (1 if i < j else 0)


def test_max_product_bounds(fx):
    for name in ("W_and_CC", "W8_CC", "M_example"):
        net = fx(name)
        values = max_product_values(net, cc_weights(net))
        n = len(net.nodes)
        assert all(0 <= v <= 1 for v in values.values())
        assert sum(values.values()) <= n * (n - 1)


def test_longest_trail_examples(fx, w0):
    assert longest_trail(w0) == ("pi", "t", "po")
    assert len(longest_trail(fx("W3_diam"))) == 5
    assert len(longest_trail(fx("W4_diam"))) == 7
    assert len(longest_trail(fx("W5_diam"))) == 9


def test_longest_trail_reuses_nodes_not_arcs(fx):
    # only one source arc and one sink arc fit in a trail, so 7 is maximal
    trail = longest_trail(fx("W3_cnc"))
    assert len(trail) == 7
    assert len(set(trail)) < len(trail)  # some node repeats
    arcs = list(zip(trail, trail[1:]))
    assert len(set(arcs)) == len(arcs)  # no arc repeats


def test_bounded_language_examples(fx, w0):
    lang, truncated = bounded_language(fx("W0_a"))
    assert lang == {(), ("a",)} and not truncated

    lang, truncated = bounded_language(fx("W1_CH"))
    assert lang == {(), ("a",), ("b",), ("a", "c"), ("b", "d")} and not truncated

    lang, truncated = bounded_language(fx("W1_ts"))
    assert len(lang) == 9 and not truncated


def test_bounded_language_prefix_closed(fx):
    for name in ("W1_ts", "W3_cyc", "M_example"):
        lang, _ = bounded_language(fx(name))
        assert () in lang
        for trace in lang:
            assert trace[:-1] in lang


def test_bounded_language_truncation_flag(fx):
    lang, truncated = bounded_language(fx("W1_ts"), LanguageBounds(max_visible_length=2))
    assert truncated
    assert lang == {(), ("a",), ("a", "b")}


def test_bounded_language_state_budget(fx):
    with pytest.raises(StateBudgetExceeded):
        bounded_language(fx("M_example"), LanguageBounds(max_states=3))
