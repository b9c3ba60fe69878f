"""The seventeen complexity measures, each total on validated nets.

All measures return exact rationals except connector heterogeneity, which
involves log2 and returns a float.  Measures that hit an undefined
expression (no connectors) either apply the conventional score 0 and flag it
or raise :class:`UndefinedForNet`, depending on the configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UndefinedForNet
from .graphs import (
    PathBudget,
    articulation_points,
    longest_trail,
    max_product_values,
    nodes_on_cycles,
    simple_paths,
)
from .net import TAU, WorkflowNet, classify_connectors

MEASURE_IDS = (
    "size", "mm", "ch", "cc", "ts", "sep", "cfc", "mcd", "seq", "acd",
    "depth", "diam", "cyc", "cnc", "dens", "dup", "esf",
)

#: Complexity dimension each measure was grouped into.
DIMENSIONS = {
    "size": "Token Behavior Complexity",
    "mm": "Token Behavior Complexity",
    "ch": "Token Behavior Complexity",
    "cc": "Token Behavior Complexity",
    "ts": "Token Behavior Complexity",
    "sep": "Token Behavior Complexity",
    "cfc": "Token Behavior Complexity",
    "mcd": "Node IO Complexity",
    "seq": "Node IO Complexity",
    "acd": "Node IO Complexity",
    "depth": "Path Complexity",
    "diam": "Path Complexity",
    "cyc": "Path Complexity",
    "cnc": "Degree of Connectedness",
    "dens": "Degree of Connectedness",
    "dup": "Other",
    "esf": "Other",
}


@dataclass(frozen=True)
class MetricConfig:
    """Evaluation options shared by all measures."""

    undefined_policy: str = "special_case_zero"  # or "error"
    dup_count_tau: bool = True
    path_budget: PathBudget = field(default_factory=PathBudget)
    ch_precision: int = 10

    def __post_init__(self):
        if self.undefined_policy not in ("special_case_zero", "error"):
            raise ValueError("undefined_policy must be 'special_case_zero' or 'error'")


@dataclass(frozen=True)
class MetricValue:
    """One measure's score on one net."""

    measure: str
    value: Fraction | float
    special_case_applied: bool = False

    def as_float(self) -> float:
        return float(self.value)


DEFAULT_CONFIG = MetricConfig()


def _special_case(measure: str, config: MetricConfig, reason: str) -> MetricValue:
    if config.undefined_policy == "error":
        raise UndefinedForNet(measure, reason)
    return MetricValue(measure, Fraction(0), special_case_applied=True)


def size(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Number of nodes: |P| + |T|."""
    return MetricValue("size", Fraction(len(net.places) + len(net.transitions)))


def mm(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Connector mismatch: unbalanced split/join arc counts per type."""
    conn = classify_connectors(net)
    and_split = sum(len(net.postset(t)) for t in conn.s_and)
    and_join = sum(len(net.preset(t)) for t in conn.j_and)
    xor_split = sum(len(net.postset(p)) for p in conn.s_xor)
    xor_join = sum(len(net.preset(p)) for p in conn.j_xor)
    return MetricValue("mm", Fraction(abs(and_split - and_join) + abs(xor_split - xor_join)))


def ch(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Connector heterogeneity: entropy of the and/xor connector mix."""
    conn = classify_connectors(net)
    total = len(conn.connectors)
    if total == 0:
        out = _special_case("ch", config, "no connectors")
        return MetricValue("ch", 0.0, special_case_applied=out.special_case_applied)
    entropy = 0.0
    for part in (len(conn.c_and), len(conn.c_xor)):
        if part == 0:
            continue  # 0 * log2(0) := 0
        frac = part / total
        entropy -= frac * math.log2(frac)
    return MetricValue("ch", entropy)


def cc_weights(net: WorkflowNet) -> dict[str, Fraction]:
    """Node weights for cross-connectivity: 1/degree on xor connectors."""
    conn = classify_connectors(net)
    out: dict[str, Fraction] = {}
    for node in net.nodes:
        if node in conn.c_xor:
            out[node] = Fraction(1, net.degree(node))
        else:
            out[node] = Fraction(1)
    return out


def cc(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Cross-connectivity: one minus the mean connection value over pairs."""
    values = max_product_values(net, cc_weights(net))
    n = len(net.places) + len(net.transitions)
    total = sum(values.values(), Fraction(0))
    return MetricValue("cc", 1 - Fraction(total, n * (n - 1)))


def ts(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Token split: extra tokens created by concurrent splits."""
    return MetricValue("ts", Fraction(sum(len(net.postset(t)) - 1 for t in net.transitions)))


def sep(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Separability: one minus the cut-vertex fraction.

    Source and sink can never be cut vertices, hence the -2 denominator.
    """
    cuts = articulation_points(net)
    denom = len(net.places) + len(net.transitions) - 2
    return MetricValue("sep", 1 - Fraction(len(cuts), denom))


def cfc(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Control flow complexity: and-splits count 1, xor-splits their fanout."""
    conn = classify_connectors(net)
    score = len(conn.s_and) + sum(len(net.postset(p)) for p in conn.s_xor)
    return MetricValue("cfc", Fraction(score))


def mcd(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Maximum connector degree; 0 by convention on connector-free nets."""
    conn = classify_connectors(net)
    if not conn.connectors:
        return _special_case("mcd", config, "no connectors")
    return MetricValue("mcd", Fraction(max(net.degree(x) for x in conn.connectors)))


def seqm(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Sequentiality: one minus the fraction of connector-free arcs."""
    conn = classify_connectors(net)
    plain = sum(1 for u, v in net.arcs if u not in conn.connectors and v not in conn.connectors)
    return MetricValue("seq", 1 - Fraction(plain, len(net.arcs)))


def acd(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Average connector degree; 0 by convention on connector-free nets."""
    conn = classify_connectors(net)
    if not conn.connectors:
        return _special_case("acd", config, "no connectors")
    total = sum(net.degree(x) for x in conn.connectors)
    return MetricValue("acd", Fraction(total, len(conn.connectors)))


def _in_depths(net: WorkflowNet, budget: PathBudget) -> dict[str, int]:
    """Per-node in-depth by the running-lambda recurrence over simple paths.

    Walks every simple path from the source, carrying the running value: +1
    after a split (when not entering a join), -1 entering a join after a
    non-split, clamped at 0 at every node.  The per-node clamp realizes the
    node-level reading of the recurrence; without it, the value entering an
    iteration's redo body would start one below zero and the documented
    loop-depth identity (and monotonicity under iteration) would fail.
    """
    conn = classify_connectors(net)
    splits = conn.s_and | conn.s_xor
    joins = conn.j_and | conn.j_xor
    best: dict[str, int] = {n: 0 for n in net.nodes}
    steps = 0

    stack: list[tuple[str, int, frozenset[str]]] = [(net.source, 0, frozenset([net.source]))]
    while stack:
        node, lam, on_path = stack.pop()
        steps += 1
        if steps > budget.max_enumerated_paths:
            from .errors import BudgetExceeded

            raise BudgetExceeded("depth paths")
        for nxt in sorted(net.postset(node), reverse=True):
            if nxt in on_path:
                continue
            step = 0
            if node in splits and nxt not in joins:
                step = 1
            elif node not in splits and nxt in joins:
                step = -1
            nxt_lam = max(0, lam + step)
            if nxt_lam > best[nxt]:
                best[nxt] = nxt_lam
            stack.append((nxt, nxt_lam, on_path | {nxt}))
    return best


def depth(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Depth: deepest node by min(in-depth, out-depth on the reversed net)."""
    from .compose import reverse

    fwd = _in_depths(net, config.path_budget)
    bwd = _in_depths(reverse(net), config.path_budget)
    return MetricValue("depth", Fraction(max(min(fwd[v], bwd[v]) for v in net.nodes)))


def diam(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Diameter: node count of the longest arc-distinct source-sink way."""
    trail = longest_trail(net, config.path_budget)
    return MetricValue("diam", Fraction(len(trail)))


def cyc(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Cyclicity: fraction of nodes lying on a cycle."""
    on_cycle = nodes_on_cycles(net)
    return MetricValue("cyc", Fraction(len(on_cycle), len(net.places) + len(net.transitions)))


def cnc(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Coefficient of network connectivity: arcs over nodes."""
    return MetricValue("cnc", Fraction(len(net.arcs), len(net.places) + len(net.transitions)))


def dens(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Density: arcs over the maximum possible number of arcs."""
    denom = 2 * len(net.transitions) * (len(net.places) - 1)
    return MetricValue("dens", Fraction(len(net.arcs), denom))


def dup(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Duplicate tasks: for each countable label with k uses, add k - 1.

    Visible labels always count; tau joins them when ``dup_count_tau`` is
    set (the default, which reproduces the worked composition scores).
    """
    counts: dict[object, int] = {}
    for t in net.transitions:
        label = net.label(t)
        if label is TAU and not config.dup_count_tau:
            continue
        key = label if label is not TAU else TAU
        counts[key] = counts.get(key, 0) + 1
    return MetricValue("dup", Fraction(sum(k - 1 for k in counts.values())))


def esf(net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    """Empty sequence flows: places wedged between and-splits and and-joins.

    Subset checks are vacuously true on empty presets/postsets.
    """
    conn = classify_connectors(net)
    count = sum(
        1
        for p in net.places
        if net.preset(p) <= conn.s_and and net.postset(p) <= conn.j_and
    )
    return MetricValue("esf", Fraction(count))


MEASURES = {
    "size": size,
    "mm": mm,
    "ch": ch,
    "cc": cc,
    "ts": ts,
    "sep": sep,
    "cfc": cfc,
    "mcd": mcd,
    "seq": seqm,
    "acd": acd,
    "depth": depth,
    "diam": diam,
    "cyc": cyc,
    "cnc": cnc,
    "dens": dens,
    "dup": dup,
    "esf": esf,
}


def compute(measure: str, net: WorkflowNet, config: MetricConfig = DEFAULT_CONFIG) -> MetricValue:
    if measure not in MEASURES:
        raise KeyError(f"unknown measure {measure!r}")
    return MEASURES[measure](net, config)


def compute_all(
    net: WorkflowNet,
    config: MetricConfig = DEFAULT_CONFIG,
) -> dict[str, MetricValue | Exception]:
    """Evaluate every measure; failures are recorded, never raised."""
    out: dict[str, MetricValue | Exception] = {}
    for mid in MEASURE_IDS:
        try:
            out[mid] = MEASURES[mid](net, config)
        except Exception as exc:  # noqa: BLE001 - per-measure failure is data
            out[mid] = exc
    return out


def cc_brute_force(net: WorkflowNet, budget: PathBudget | None = None) -> Fraction:
    """Cross-connectivity via exhaustive simple-path enumeration.

    Independent oracle for the Dijkstra closure: correct on nets small
    enough to enumerate, including cyclic ones (a best walk either is a
    simple path or pads one with weight-1 cycles, and for pair (v, v) the
    best product is the best simple cycle through v).
    """
    budget = budget or PathBudget()
    weights = cc_weights(net)
    n = len(net.places) + len(net.transitions)

    def node_product(path) -> Fraction:
        prod = Fraction(1)
        for node in path:
            prod *= weights[node]
        return prod

    total = Fraction(0)
    for u in sorted(net.nodes):
        for v in sorted(net.nodes):
            best = Fraction(0)
            if u == v:
                # cycles through u: a simple path u -> w plus the closing
                # arc, which multiplies the start weight in once more
                for w in sorted(net.preset(u)):
                    for path in simple_paths(net, u, w, budget):
                        best = max(best, node_product(path) * weights[u])
            else:
                for path in simple_paths(net, u, v, budget):
                    best = max(best, node_product(path))
            total += best
    return 1 - Fraction(total, n * (n - 1))
