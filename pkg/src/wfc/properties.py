"""Property definitions, witness replay, falsification search, verdict tables.

The harness is a falsifier and witness replayer, not a prover.  Existential
properties are confirmed by replaying the catalog's witness cases (randomized
search is the fallback); universal properties are attacked with fixtures,
family grids and random block nets, and additionally sampled against the
exact composition identities where one exists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Sequence

from .compose import Operator, compose, is_permutation, relabel, reverse
from .errors import UndefinedForNet, WfcError
from .generators import RandomNetSpec, build_family, build_fixture, random_block_net
from .graphs import LanguageBounds, PathBudget, bounded_language
from .metrics import MEASURE_IDS, MEASURES, MetricConfig
from .net import WorkflowNet, classify_connectors

PROPERTY_IDS = (
    "w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9",
    "defined", "minimum", "inf", "notsup", "additive",
)

#: Properties whose verdict is evaluated once per block operator.
OPERATOR_SCOPED = ("w5", "w6", "w9", "notsup", "additive")

#: Properties claiming existence of a witness; the rest are universal claims.
EXISTENTIAL = ("w1", "w3", "w4", "w6", "w7", "w9", "notsup", "minimum", "inf")

CONFIRMED = "ConfirmedByWitness"
FALSIFIED = "Falsified"
NOT_FALSIFIED = "NotFalsified"
THEOREM = "TheoremVerified"

#: Scores on connector-free nets fall back to the conventional 0, which the
#: sub/superadditivity analyses for these measures explicitly exclude.
CONNECTOR_ONLY = {("mcd", "w9"), ("mcd", "notsup"), ("mcd", "additive"),
                  ("acd", "w9"), ("acd", "notsup"), ("acd", "additive")}


@dataclass(frozen=True)
class HarnessConfig:
    search_budget: int = 200
    seed: int = 0
    language_bounds: LanguageBounds = field(default_factory=LanguageBounds)
    path_budget: PathBudget = field(default_factory=PathBudget)
    metric_config: MetricConfig = field(default_factory=MetricConfig)

    def __post_init__(self):
        if self.search_budget < 0:
            raise ValueError("search_budget must be >= 0")


@dataclass
class PropertyVerdict:
    measure: str
    prop: str
    status: str
    per_operator: dict[str, str] | None = None
    evidence: list[str] = field(default_factory=list)
    budget_used: int = 0
    info: str | None = None

    def to_dict(self) -> dict:
        out = {"measure": self.measure, "property": self.prop, "status": self.status}
        if self.per_operator is not None:
            out["per_operator"] = dict(self.per_operator)
        if self.evidence:
            out["evidence"] = list(self.evidence)
        if self.budget_used:
            out["budget_used"] = self.budget_used
        if self.info:
            out["info"] = self.info
        return out


# --- witness catalog -----------------------------------------------------------
# Net references: "name" is a fixture, "rev:name" its arc reversal, and
# ("family", {params}) a family instance.

NetRef = object

_W1_PAIRS = {
    "size": ("W1_size", "W2_size"), "mm": ("W1_MM", "W2_MM"), "ch": ("W1_CH", "W2_CH"),
    "cc": ("W1_CC", "W2_CC"), "ts": ("W1_ts", "W2_ts"), "sep": ("W1_sep", "W2_sep"),
    "cfc": ("W1_cfc", "W2_cfc"), "mcd": ("wfmax1", "wfmax2"), "seq": ("wfseq1", "wfseq2"),
    "acd": ("wfavg1", "wfavg2"), "depth": ("W2_depth", "W3_depth"),
    "diam": ("W2_diam", "W3_diam"), "cyc": ("W2_cyc", "W3_cyc"),
    "cnc": ("W1_cnc", "W2_cnc"), "dens": ("W1_dens", "W2_dens"),
    "dup": ("W1_dup", "W2_dup"), "esf": ("W1_esf", "W2_esf"),
}

_W3_PAIRS = {
    "size": ("W2_size", "W3_size"), "mm": ("W2_MM", "W3_MM"), "ch": ("W2_CH", "W3_CH"),
    "cc": ("W2_CC", "W7_CC"), "ts": ("W1_ts", "W3_ts"), "sep": ("W1_sep", "W3_sep"),
    "cfc": ("W2_cfc", "W3_cfc"), "mcd": ("wfmax2", "wfmax3"),
    "seq": (("seq", {"c": 2, "k": 3}), ("seq", {"c": 3, "k": 3})),
    "acd": ("wfavg2", "wfavg3"), "depth": ("W1_depth", "W2_depth"),
    "diam": ("W1_diam", "W2_diam"), "cyc": ("W1_cyc", "W2_cyc"),
    "cnc": (("cnc_one", {"k": 1}), ("cnc_one", {"k": 2})),
    "dens": (("dens_fan", {"k": 2}), ("dens_fan", {"k": 3})),
    "dup": ("W1_dup", "W3_dup"),
    "esf": (("esf", {"n": 1, "k": 2}), ("esf", {"n": 2, "k": 2})),
}

_W4_PAIRS = {
    "size": ("W1_size", "W2_size"), "mm": ("W1_MM", "W2_MM"), "ch": ("W1_CH", "W2_CH"),
    "cc": ("W3_CC", "W4_CC"), "ts": ("W1_ts", "W2_ts"), "sep": ("W1_sep", "W2_sep"),
    "cfc": ("W1_cfc", "W2_cfc"), "mcd": ("wfmax1", "wfmax2"), "seq": ("wfseq1", "wfseq2"),
    "acd": ("wfavg1", "wfavg2"), "depth": ("W2_depth", "W3_depth"),
    "diam": ("W2_diam", "W3_diam"), "cyc": ("W2_cyc", "W3_cyc"),
    "cnc": ("W1_cnc", "W2_cnc"), "dens": ("W1_dens", "W2_dens"),
    "dup": ("W1_dup", "W2_dup"), "esf": ("W1_esf", "W2_esf"),
}

_W7_PAIRS = {
    "size": ("W3_size", "W4_size"), "mm": ("W4_MM", "W5_MM"), "ch": ("W6_CH", "W7_CH"),
    "cc": ("W7_CC", "W8_CC"), "ts": ("W3_ts", "W4_ts"), "sep": ("W9_sep", "W10_sep"),
    "cfc": ("W4_cfc", "W5_cfc"), "mcd": ("wfmax4", "wfmax5"), "seq": ("wfseq6", "wfseq7"),
    "acd": ("wfavg7", "wfavg8"), "depth": ("W5_depth", "W6_depth"),
    "diam": ("W4_diam", "W5_diam"), "cyc": ("W4_cyc", "W5_cyc"),
    "cnc": ("W3_cnc", "W4_cnc"), "dens": ("W3_dens", "W4_dens"),
    "esf": ("W3_esf", "W4_esf"),
}

#: Permutation pairs used to check that dup ignores rewiring.
_PERM_PAIRS = [pair for m, pair in _W7_PAIRS.items()] + [("W3_ts", "W4_ts")]

_ALL_OPS = ("seq", "par", "xor", "loop")


def _per_op(value) -> dict[str, NetRef]:
    return {op: value for op in _ALL_OPS}


# measure -> op -> (m1, m2, index of the part the composite drops below)
_W5_FALSIFIERS: dict[str, dict[str, tuple]] = {
    "mm": _per_op(("W2_MM", "W3_MM", 0)),
    "ch": {
        "seq": ("W1_CH", ("ch", {"k": 1, "n": 3}), 0),
        "par": ("W1_CH", ("ch", {"k": 1, "n": 3}), 0),
        "xor": ("W1_CH", ("ch", {"k": 1, "n": 3}), 0),
        "loop": ("W1_CH", "W3_CH", 0),
    },
    "cc": {
        "seq": ("W1_CC", "W2_CC", 0),
        "par": ("W1_CC", "W2_CC", 0),
        "xor": ("W0", "W2_size", 1),
        "loop": ("W0", "W2_size", 1),
    },
    "sep": {
        "seq": ("W2_sep", "W2_sep", 0),
        "par": ("W2_sep", "W2_sep", 0),
        "xor": ("W6_sep", "W5_sep", 0),
        "loop": ("W2_sep", "W2_sep", 0),
    },
    "seq": _per_op(("wfseq4", "W0", 0)),
    "acd": _per_op(("wfavg6", "wfavg5", 1)),
    "cyc": {
        "seq": ("W3_cyc", "W1_cyc", 0),
        "par": ("W3_cyc", "W1_cyc", 0),
        "xor": ("W3_cyc", "W1_cyc", 0),
        "loop": (("cc_min", {"k": 5}), "W0", 0),
    },
    "cnc": _per_op(("W3_cnc", "W1_cnc", 0)),
    "dens": _per_op(("W1_dens", "W1_dens", 0)),
    "diam": {"loop": ("W0", ("diam_chain", {"k": 6}), 1)},
}

# measure -> op -> (m1, m2, m3): C(m1) = C(m2) but C(m1 . m3) != C(m2 . m3)
_W6_WITNESSES: dict[str, dict[str, tuple]] = {
    "mm": _per_op(("W2_MM", "W3_MM", "W3_MM")),
    "ch": {
        "seq": ("W4_CH", "W5_CH", "W3_CH"),
        "par": ("W4_CH", "W5_CH", "W4_size"),
        "xor": ("W4_CH", "W5_CH", "W3_CH"),
        "loop": ("W4_CH", "W5_CH", "W3_CH"),
    },
    "cc": {
        "seq": ("W5_CC", "W6_CC", "W1_CC"),
        "par": (("cc_fin", {"k": 1}), ("cc_fin", {"k": 2}), ("cc_fin", {"k": 1})),
        "xor": (("cc_fin", {"k": 1}), ("cc_fin", {"k": 2}), ("cc_fin", {"k": 1})),
        "loop": (("cc_fin", {"k": 1}), ("cc_fin", {"k": 2}), ("cc_fin", {"k": 1})),
    },
    "sep": _per_op(("W7_sep", "W8_sep", "W0")),
    "mcd": _per_op(("wfmax2", "wfmax3", "W0")),
    "seq": _per_op(("wfseq4", "wfseq5", "W0")),
    "acd": _per_op(("wfavg2", "wfavg3", "wfavg2")),
    "depth": {"seq": ("rev:W4_depth", "W4_depth", "W4_depth")},
    "cyc": _per_op(("W1_cyc", "W2_cyc", "W3_cyc")),
    "cnc": _per_op(("W2_cnc", ("cnc_one", {"k": 1}), "W3_cnc")),
    "dens": _per_op(("W2_dens", "W3_dens", "W1_dens")),
    "dup": _per_op(("W0_a", "W0_b", "W0_a")),
}

# measure -> op -> (m1, m2): C(m1 . m2) > C(m1) + C(m2)
_W9_WITNESSES: dict[str, dict[str, tuple]] = {
    "size": _per_op(("W0", "W0")),
    "ch": _per_op(("W2_CH", "W4_size")),
    "cc": _per_op((("cc_min", {"k": 1}), ("cc_min", {"k": 1}))),
    "ts": {"par": ("W0", "W0")},
    "sep": {"par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0")},
    "cfc": {"par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0")},
    "seq": {"par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0")},
    "depth": {
        "seq": ("rev:Wsub3_depth", "Wsub3_depth"),
        "par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0"),
    },
    "diam": _per_op(("W0", "W0")),
    "cyc": {"loop": ("W0", "W0")},
    "dup": _per_op(("W0_a", "W0_a")),
}

# measure -> op -> (m1, m2): C(m1 . m2) < C(m1) + C(m2)
_NOTSUP_WITNESSES: dict[str, dict[str, tuple]] = {
    "mm": _per_op(("W2_MM", "W3_MM")),
    "ch": _per_op(("W1_CH", "W1_CH")),
    "cc": _per_op(("W1_CC", "W2_CC")),
    "sep": _per_op(("W2_sep", "W2_sep")),
    "mcd": _per_op(("wfmax1", "wfmax1")),
    "seq": _per_op(("wfseq4", "W0")),
    "acd": _per_op(("wfavg1", "wfavg2")),
    "depth": _per_op(("W3_depth", "W3_depth")),
    "diam": {
        "par": (("diam_chain", {"k": 4}), ("diam_chain", {"k": 4})),
        "xor": (("diam_chain", {"k": 4}), ("diam_chain", {"k": 4})),
        "loop": (("diam_chain", {"k": 4}), ("diam_chain", {"k": 4})),
    },
    "cyc": {
        "seq": ("W3_cyc", "W3_cyc"), "par": ("W3_cyc", "W3_cyc"),
        "xor": ("W3_cyc", "W3_cyc"),
        "loop": (("cyc_dense", {"k": 2}), ("cyc_dense", {"k": 2})),
    },
    "cnc": _per_op(("W0", "W0")),
    "dens": _per_op(("W0", "W0")),
}

# measure -> op -> (m1, m2): C(m1 . m2) != C(m1) + C(m2)
_NONADDITIVE_WITNESSES: dict[str, dict[str, tuple]] = {
    "size": _per_op(("W0", "W0")),
    "mm": _per_op(("W2_MM", "W3_MM")),
    "ch": _per_op(("W2_CH", "W4_size")),
    "cc": _per_op((("cc_min", {"k": 1}), ("cc_min", {"k": 1}))),
    "ts": {"par": ("W0", "W0")},
    "sep": _per_op(("W2_sep", "W2_sep")),
    "cfc": {"par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0")},
    "mcd": _per_op(("wfmax1", "wfmax1")),
    "seq": _per_op(("wfseq4", "W0")),
    "acd": _per_op(("wfavg1", "wfavg2")),
    "depth": {
        "seq": ("W1_depth", "W1_depth"),
        "par": ("W0", "W0"), "xor": ("W0", "W0"), "loop": ("W0", "W0"),
    },
    "diam": _per_op(("W0", "W0")),
    "cyc": {
        "seq": ("W3_cyc", "W3_cyc"), "par": ("W3_cyc", "W3_cyc"),
        "xor": ("W3_cyc", "W3_cyc"), "loop": ("W0", "W0"),
    },
    "cnc": _per_op(("W0", "W0")),
    "dens": _per_op(("W0", "W0")),
    "dup": _per_op(("W0_a", "W0_a")),
}

#: Attained minimum per measure (fixture witness); None means no minimum.
_MINIMA: dict[str, str | None] = {
    "size": "W0", "mm": "W0", "ch": "W0", "cc": None, "ts": "W0", "sep": "W0",
    "cfc": "W0", "mcd": "W0", "seq": "W0", "acd": "W0", "depth": "W0",
    "diam": "W0", "cyc": "W0", "cnc": "W0", "dens": None, "dup": "W1_dup",
    "esf": "W1_esf",
}

#: Strictly decreasing family grids falsifying minimum attainment.
_NO_MINIMUM = {"cc": ("cc_min", "k"), "dens": ("dens_chain", "k")}

#: Constant-score padding families falsifying w2 (family, fixed, varying).
_W2_FAMILIES: dict[str, tuple[str, dict[str, int], str]] = {
    "mm": ("mm", {"c": 1}, "k"),
    "ch": ("ch", {"n": 2}, "k"),
    "cc": ("cc_fin", {}, "k"),
    "ts": ("ts", {"c": 1}, "k"),
    "sep": ("cnc_chain", {}, "k"),
    "cfc": ("cfc", {"c": 2}, "k"),
    "mcd": ("mcd", {"n": 2}, "c"),
    "seq": ("seq", {"k": 1}, "c"),
    "acd": ("acd", {"c": 2}, "k"),
    "depth": ("dens_fan", {}, "k"),
    "diam": ("dens_fan", {}, "k"),
    "cyc": ("cnc_chain", {}, "k"),
    "cnc": ("cnc_one", {}, "k"),
    "dens": ("dens_fan", {}, "k"),
    "esf": ("esf", {"k": 2}, "n"),
}

#: Distinct-score families confirming value infinitude (family, fixed, varying, start).
_INF_FAMILIES: dict[str, tuple[str, dict[str, int], str, int]] = {
    "size": ("diam_chain", {}, "k", 1),
    "mm": ("mm", {"k": 1}, "c", 1),
    "ch": ("ch", {"k": 1}, "n", 2),
    "cc": ("cc_min", {}, "k", 1),
    "ts": ("ts", {"k": 1}, "c", 1),
    "sep": ("sep", {"n": 1}, "m", 1),
    "cfc": ("cfc", {"k": 1}, "c", 2),
    "mcd": ("mcd", {"c": 1}, "n", 2),
    "seq": ("seq", {"c": 1}, "k", 1),
    "acd": ("acd", {"k": 1}, "c", 2),
    "depth": ("depth_ladder", {}, "n", 1),
    "diam": ("diam_chain", {}, "k", 1),
    "cyc": ("cyc_loop", {}, "k", 2),
    "cnc": ("cnc_chain", {}, "k", 1),
    "dens": ("dens_chain", {}, "k", 1),
    "dup": ("dup_chain", {}, "c", 0),
    "esf": ("esf", {"n": 1}, "k", 2),
}


# --- exact composition identities -------------------------------------------------

def _sum(parts: Sequence[Fraction]) -> Fraction:
    return sum(parts, Fraction(0))


_IDENTITIES: dict[tuple[str, str], Callable] = {
    ("size", "seq"): lambda parts, comp: comp == _sum(parts) + len(parts) - 1,
    ("size", "par"): lambda parts, comp: comp == _sum(parts) + 4,
    ("size", "xor"): lambda parts, comp: comp == _sum(parts) + 2 * len(parts) + 2,
    ("size", "loop"): lambda parts, comp: comp == _sum(parts) + 2 * len(parts) + 6,
    ("ts", "seq"): lambda parts, comp: comp == _sum(parts),
    ("ts", "par"): lambda parts, comp: comp == _sum(parts) + len(parts) - 1,
    ("ts", "xor"): lambda parts, comp: comp == _sum(parts),
    ("ts", "loop"): lambda parts, comp: comp == _sum(parts),
    ("cfc", "seq"): lambda parts, comp: comp == _sum(parts),
    ("cfc", "par"): lambda parts, comp: comp == _sum(parts) + 1,
    ("cfc", "xor"): lambda parts, comp: comp == _sum(parts) + len(parts),
    ("cfc", "loop"): lambda parts, comp: comp == _sum(parts) + len(parts),
    ("esf", "seq"): lambda parts, comp: comp == _sum(parts),
    ("esf", "par"): lambda parts, comp: comp == _sum(parts),
    ("esf", "xor"): lambda parts, comp: comp == _sum(parts),
    ("esf", "loop"): lambda parts, comp: comp == _sum(parts),
    ("diam", "seq"): lambda parts, comp: comp == _sum(parts) + len(parts) - 1,
    ("diam", "par"): lambda parts, comp: comp == max(parts) + 4,
    ("diam", "xor"): lambda parts, comp: comp == max(parts) + 4,
    ("diam", "loop"): lambda parts, comp: comp == parts[0] + 8,
}

#: Proven bounds backing no-verdicts on existential cells and yes-verdicts on
#: monotonicity without an exact identity.  Comparator kinds: the composite is
#: compared against the sum or max of the parts.
_SUBADDITIVE = {  # composite <= sum of parts, per operator
    "mm": _ALL_OPS,
    "cnc": _ALL_OPS,
    "dens": _ALL_OPS,
    "cyc": ("seq", "par", "xor"),
    "sep": ("seq",),
    "seq": ("seq",),
    "mcd": _ALL_OPS,  # on connector-bearing operands
    "acd": _ALL_OPS,  # on connector-bearing operands
}

_SUPERADDITIVE_OR_EQUAL = {  # composite >= sum of parts
    "size": _ALL_OPS,
    "ts": _ALL_OPS,
    "cfc": _ALL_OPS,
    "dup": _ALL_OPS,
    "esf": _ALL_OPS,
    "diam": ("seq",),
}

_MONOTONE = {  # composite >= every part
    "size": _ALL_OPS, "ts": _ALL_OPS, "cfc": _ALL_OPS, "esf": _ALL_OPS,
    "mcd": _ALL_OPS, "dup": _ALL_OPS, "depth": _ALL_OPS,
    "diam": ("seq", "par", "xor"),
}


class Harness:
    """Evaluation context: shared fixture cache and random-net pool."""

    def __init__(self, config: HarnessConfig | None = None):
        self.config = config or HarnessConfig()
        self._fixtures: dict[str, WorkflowNet] = {}
        self._values: dict[tuple[WorkflowNet, str], Fraction | float] = {}
        self._pool: list[WorkflowNet] | None = None

    # -- net and value helpers ------------------------------------------------

    def resolve(self, ref: NetRef) -> WorkflowNet:
        if isinstance(ref, WorkflowNet):
            return ref
        if isinstance(ref, tuple):
            family, params = ref
            return build_family(family, **params)
        if isinstance(ref, str) and ref.startswith("rev:"):
            return reverse(self.fixture(ref[4:]))
        return self.fixture(ref)

    def fixture(self, name: str) -> WorkflowNet:
        if name not in self._fixtures:
            self._fixtures[name] = build_fixture(name)
        return self._fixtures[name]

    def value(self, measure: str, net: WorkflowNet) -> Fraction | float:
        key = (net, measure)
        if key not in self._values:
            self._values[key] = MEASURES[measure](net, self.config.metric_config).value
        return self._values[key]

    def pool(self) -> list[WorkflowNet]:
        if self._pool is None:
            self._pool = [
                random_block_net(RandomNetSpec(seed=self.config.seed * 100_003 + i, max_leaves=4))
                for i in range(min(self.config.search_budget, 200))
            ]
        return self._pool

    def _pairs(self, count: int) -> list[tuple[WorkflowNet, WorkflowNet]]:
        pool = self.pool()
        if not pool:
            return []
        return [(pool[(2 * i) % len(pool)], pool[(2 * i + 1) % len(pool)]) for i in range(count)]

    @staticmethod
    def _fmt(value) -> str:
        if isinstance(value, Fraction):
            return str(value)
        return f"{value:.6f}"

    def _differs(self, a, b) -> bool:
        if isinstance(a, float) or isinstance(b, float):
            return abs(float(a) - float(b)) > 1e-9
        return a != b

    # -- per-property checks ----------------------------------------------------

    def check(self, measure: str, prop: str) -> PropertyVerdict:
        if measure not in MEASURE_IDS:
            raise KeyError(f"unknown measure {measure!r}")
        if prop not in PROPERTY_IDS:
            raise KeyError(f"unknown property {prop!r}")
        handler = getattr(self, f"_check_{prop}")
        return handler(measure)

    # existential pair properties -------------------------------------------------

    def _pair_verdict(self, measure: str, prop: str, pair, ok: Callable, describe: str,
                      fallback: Callable | None = None) -> PropertyVerdict:
        if pair is not None:
            a, b = self.resolve(pair[0]), self.resolve(pair[1])
            va, vb = self.value(measure, a), self.value(measure, b)
            if ok(a, b, va, vb):
                return PropertyVerdict(
                    measure, prop, CONFIRMED,
                    evidence=[f"{describe}: {pair[0]} -> {self._fmt(va)}, {pair[1]} -> {self._fmt(vb)}"],
                )
        if fallback is not None:
            found = fallback()
            if found is not None:
                return PropertyVerdict(measure, prop, CONFIRMED, evidence=[found],
                                       budget_used=len(self.pool()))
        return PropertyVerdict(measure, prop, NOT_FALSIFIED, budget_used=len(self.pool()))

    def _check_w1(self, measure: str) -> PropertyVerdict:
        def search():
            vals = {}
            for net in self.pool():
                v = self.value(measure, net)
                for prev, other in vals.items():
                    if self._differs(v, other):
                        return f"random nets with scores {self._fmt(other)} != {self._fmt(v)}"
                vals[id(net)] = v
            return None

        return self._pair_verdict(
            measure, "w1", _W1_PAIRS.get(measure),
            lambda a, b, va, vb: self._differs(va, vb), "distinct scores", search,
        )

    def _check_w3(self, measure: str) -> PropertyVerdict:
        def search():
            seen: list[tuple[WorkflowNet, object]] = []
            for net in self.pool():
                v = self.value(measure, net)
                for other, ov in seen:
                    if not self._differs(v, ov) and other != net:
                        return f"distinct random nets share score {self._fmt(v)}"
                seen.append((net, v))
            return None

        return self._pair_verdict(
            measure, "w3", _W3_PAIRS.get(measure),
            lambda a, b, va, vb: not self._differs(va, vb) and a != b,
            "collision", search,
        )

    def _check_w4(self, measure: str) -> PropertyVerdict:
        def same_language(a: WorkflowNet, b: WorkflowNet) -> bool:
            la, ta = bounded_language(a, self.config.language_bounds)
            lb, tb = bounded_language(b, self.config.language_bounds)
            return not ta and not tb and la == lb

        return self._pair_verdict(
            measure, "w4", _W4_PAIRS.get(measure),
            lambda a, b, va, vb: same_language(a, b) and self._differs(va, vb),
            "same language, different scores",
        )

    def _check_w7(self, measure: str) -> PropertyVerdict:
        if measure == "dup":
            evidence = []
            for a_ref, b_ref in _PERM_PAIRS:
                a, b = self.fixture(a_ref), self.fixture(b_ref)
                if not is_permutation(a, b):
                    continue
                va, vb = self.value("dup", a), self.value("dup", b)
                if self._differs(va, vb):
                    return PropertyVerdict("dup", "w7", CONFIRMED,
                                           evidence=[f"{a_ref}/{b_ref}: {va} != {vb}"])
                evidence.append(f"{a_ref}/{b_ref}: equal ({self._fmt(va)})")
            return PropertyVerdict("dup", "w7", NOT_FALSIFIED, evidence=evidence[:3],
                                   info="duplicate counts are invariant on all catalog permutation pairs")
        return self._pair_verdict(
            measure, "w7", _W7_PAIRS.get(measure),
            lambda a, b, va, vb: is_permutation(a, b) and self._differs(va, vb),
            "permutation pair",
        )

    # family-grid properties ---------------------------------------------------------

    def _check_w2(self, measure: str) -> PropertyVerdict:
        spec = _W2_FAMILIES.get(measure)
        if spec is None:
            return PropertyVerdict(measure, "w2", NOT_FALSIFIED,
                                   budget_used=self.config.search_budget,
                                   info="no constant-score padding family exists")
        family, fixed, varying = spec
        count = max(3, min(self.config.search_budget, 30))
        # the depth padding family needs at least two parallel branches
        start = 2 if (family == "dens_fan" and measure == "depth") else 1
        nets, scores = [], []
        for k in range(start, start + count):
            params = dict(fixed)
            params[varying] = k
            net = build_family(family, **params)
            nets.append(net)
            scores.append(self.value(measure, net))
        first = scores[0]
        constant = all(not self._differs(first, s) for s in scores)
        distinct = len({n.nodes for n in nets}) == len(nets)
        if constant and distinct:
            return PropertyVerdict(
                measure, "w2", FALSIFIED,
                evidence=[f"{len(nets)} distinct {family} nets all score {self._fmt(first)}"],
                budget_used=count,
            )
        return PropertyVerdict(measure, "w2", NOT_FALSIFIED, budget_used=count)

    def _check_inf(self, measure: str) -> PropertyVerdict:
        family, fixed, varying, start = _INF_FAMILIES[measure]
        count = max(3, min(self.config.search_budget, 30))
        values = []
        for k in range(start, start + count):
            params = dict(fixed)
            params[varying] = k
            values.append(self.value(measure, build_family(family, **params)))
        distinct = len({float(v) for v in values}) == len(values)
        if distinct:
            return PropertyVerdict(
                measure, "inf", CONFIRMED,
                evidence=[f"{family} grid yields {len(values)} pairwise distinct scores"],
                budget_used=count,
            )
        return PropertyVerdict(measure, "inf", NOT_FALSIFIED, budget_used=count)

    def _check_minimum(self, measure: str) -> PropertyVerdict:
        if measure in _NO_MINIMUM:
            family, varying = _NO_MINIMUM[measure]
            count = max(3, min(self.config.search_budget, 20))
            values = [self.value(measure, build_family(family, **{varying: k}))
                      for k in range(1, count + 1)]
            decreasing = all(values[i + 1] < values[i] for i in range(len(values) - 1))
            if decreasing:
                return PropertyVerdict(
                    measure, "minimum", FALSIFIED,
                    evidence=[f"{family} scores strictly decrease over {count} steps "
                              f"({self._fmt(values[0])} .. {self._fmt(values[-1])})"],
                    budget_used=count,
                )
            return PropertyVerdict(measure, "minimum", NOT_FALSIFIED, budget_used=count)
        witness = _MINIMA[measure]
        net = self.fixture(witness)
        floor = self.value(measure, net)
        for other in self.pool():
            if self.value(measure, other) < floor:
                return PropertyVerdict(
                    measure, "minimum", FALSIFIED,
                    evidence=[f"random net scores below {witness} ({self._fmt(floor)})"],
                )
        return PropertyVerdict(
            measure, "minimum", CONFIRMED,
            evidence=[f"{witness} attains {self._fmt(floor)}; no sampled net scores lower"],
            budget_used=len(self.pool()),
        )

    # universal properties --------------------------------------------------------

    def _check_w8(self, measure: str) -> PropertyVerdict:
        nets = [self.fixture(n) for n in ("W1_CH", "W2_ts", "M_example")] + self.pool()
        checked = 0
        for net in nets[: max(10, min(len(nets), 100))]:
            labels = sorted(net.visible_labels())
            if not labels:
                continue
            rotated = {l: labels[(i + 1) % len(labels)] for i, l in enumerate(labels)}
            if len(labels) == 1:
                rotated = {labels[0]: labels[0] + "_renamed"}
            other = relabel(net, rotated)
            checked += 1
            va, vb = self.value(measure, net), MEASURES[measure](other, self.config.metric_config).value
            if self._differs(va, vb):
                return PropertyVerdict(
                    measure, "w8", FALSIFIED,
                    evidence=[f"relabeling changed the score: {self._fmt(va)} -> {self._fmt(vb)}"],
                )
        return PropertyVerdict(measure, "w8", NOT_FALSIFIED, budget_used=checked)

    def _check_defined(self, measure: str) -> PropertyVerdict:
        strict = MetricConfig(
            undefined_policy="error",
            dup_count_tau=self.config.metric_config.dup_count_tau,
            path_budget=self.config.metric_config.path_budget,
        )
        nets: list[tuple[str, WorkflowNet]] = [("W0", self.fixture("W0"))]
        nets += [(f"random[{i}]", net) for i, net in enumerate(self.pool())]
        for name, net in nets:
            try:
                value = MEASURES[measure](net, strict).value
            except UndefinedForNet as exc:
                return PropertyVerdict(
                    measure, "defined", FALSIFIED,
                    evidence=[f"undefined on {name}: {exc}"],
                )
            if float(value) < 0:
                return PropertyVerdict(
                    measure, "defined", FALSIFIED,
                    evidence=[f"negative score {self._fmt(value)} on {name}"],
                )
        return PropertyVerdict(measure, "defined", NOT_FALSIFIED, budget_used=len(nets))

    # operator-scoped properties ----------------------------------------------------

    def _compose_value(self, measure: str, op: str, operands: list[WorkflowNet]):
        comp = compose(Operator.from_string(op), operands)
        return self.value(measure, comp)

    def _theorem_pairs(self, measure: str) -> list[tuple[WorkflowNet, WorkflowNet]]:
        expensive = measure in ("cc", "diam", "depth", "sep")
        count = min(self.config.search_budget, 40 if expensive else 120)
        pairs = self._pairs(count)
        if (measure, "w9") in CONNECTOR_ONLY:
            pairs = [
                (a, b) for a, b in pairs
                if classify_connectors(a).connectors and classify_connectors(b).connectors
            ]
        return pairs

    def _sample_identity(self, measure: str, op: str) -> tuple[str, str] | None:
        """Sample an identity/bound; returns (status, note) or None if none applies."""
        identity = _IDENTITIES.get((measure, op))
        checks: list[Callable] = []
        note = ""
        if identity is not None:
            checks.append(identity)
            note = "composition identity"
        else:
            # only exact-rational measures carry registered bounds
            if op in _SUBADDITIVE.get(measure, ()):
                checks.append(lambda parts, comp: comp <= _sum(parts))
                note = "subadditivity bound"
            if op in _SUPERADDITIVE_OR_EQUAL.get(measure, ()):
                checks.append(lambda parts, comp: comp >= _sum(parts))
                note = "superadditivity bound"
        if not checks:
            return None
        pairs = self._theorem_pairs(measure)
        fixture_pairs = [
            (self.fixture("W1_CH"), self.fixture("W2_MM")),
            (self.fixture("W4_size"), self.fixture("W3_cyc")),
        ]
        for a, b in fixture_pairs + pairs:
            parts = [self.value(measure, a), self.value(measure, b)]
            comp = self._compose_value(measure, op, [a, b])
            for chk in checks:
                if not chk(parts, comp):
                    return (FALSIFIED, f"{note} violated on a sampled pair")
        return (THEOREM, f"{note} held on {len(pairs) + len(fixture_pairs)} sampled pairs")

    def _check_w5(self, measure: str) -> PropertyVerdict:
        per_op: dict[str, str] = {}
        evidence: list[str] = []
        info = None
        for op in _ALL_OPS:
            witness = _W5_FALSIFIERS.get(measure, {}).get(op)
            if witness is not None:
                m1, m2, part = witness
                a, b = self.resolve(m1), self.resolve(m2)
                parts = [self.value(measure, a), self.value(measure, b)]
                comp = self._compose_value(measure, op, [a, b])
                if float(comp) < float(parts[part]) - (1e-9 if isinstance(comp, float) else 0):
                    per_op[op] = FALSIFIED
                    evidence.append(
                        f"{op}: C={self._fmt(comp)} < part {self._fmt(parts[part])}"
                    )
                    continue
            if op in _MONOTONE.get(measure, ()) or (measure, op) in _IDENTITIES:
                sampled = self._sample_identity_or_monotone(measure, op)
                per_op[op] = sampled[0]
                evidence.append(f"{op}: {sampled[1]}")
            else:
                per_op[op] = self._search_w5(measure, op)
        if measure == "sep":
            info = ("under the weakened monotonicity reading that excludes score-1 "
                    "first operands, the choice operator would be monotone")
        return self._aggregate(measure, "w5", per_op, evidence, info)

    def _sample_identity_or_monotone(self, measure: str, op: str) -> tuple[str, str]:
        identity = _IDENTITIES.get((measure, op))
        pairs = self._theorem_pairs(measure)
        for a, b in pairs:
            parts = [self.value(measure, a), self.value(measure, b)]
            comp = self._compose_value(measure, op, [a, b])
            if identity is not None and not identity(parts, comp):
                return (FALSIFIED, "identity violated")
            if float(comp) < max(float(p) for p in parts) - 1e-9:
                return (FALSIFIED, "composite dropped below a part")
        kind = "identity" if identity is not None else "monotonicity bound"
        return (THEOREM, f"{kind} held on {len(pairs)} sampled pairs")

    def _search_w5(self, measure: str, op: str) -> str:
        for a, b in self._pairs(min(self.config.search_budget, 60)):
            try:
                parts = [self.value(measure, a), self.value(measure, b)]
                comp = self._compose_value(measure, op, [a, b])
            except WfcError:
                continue
            if float(comp) < min(float(p) for p in parts) - 1e-9:
                return FALSIFIED
        return NOT_FALSIFIED

    def _check_w6(self, measure: str) -> PropertyVerdict:
        per_op: dict[str, str] = {}
        evidence: list[str] = []
        for op in _ALL_OPS:
            witness = _W6_WITNESSES.get(measure, {}).get(op)
            if witness is not None:
                m1, m2, m3 = (self.resolve(r) for r in witness)
                v1, v2 = self.value(measure, m1), self.value(measure, m2)
                c1 = self._compose_value(measure, op, [m1, m3])
                c2 = self._compose_value(measure, op, [m2, m3])
                if not self._differs(v1, v2) and self._differs(c1, c2):
                    per_op[op] = CONFIRMED
                    evidence.append(f"{op}: {self._fmt(c1)} != {self._fmt(c2)}")
                    continue
                per_op[op] = NOT_FALSIFIED
                evidence.append(f"{op}: witness did not replay")
                continue
            sampled = self._sample_identity(measure, op)
            if sampled is not None and sampled[0] == THEOREM:
                per_op[op] = THEOREM
                evidence.append(f"{op}: composition determined by part scores ({sampled[1]})")
            else:
                per_op[op] = NOT_FALSIFIED
        return self._aggregate(measure, "w6", per_op, evidence)

    def _relation_check(self, measure: str, prop: str, witnesses, relation: Callable,
                        describe: str) -> PropertyVerdict:
        per_op: dict[str, str] = {}
        evidence: list[str] = []
        for op in _ALL_OPS:
            witness = witnesses.get(measure, {}).get(op)
            if witness is not None:
                a, b = self.resolve(witness[0]), self.resolve(witness[1])
                parts = [self.value(measure, a), self.value(measure, b)]
                comp = self._compose_value(measure, op, [a, b])
                if relation(comp, parts):
                    status = FALSIFIED if prop == "additive" else CONFIRMED
                    per_op[op] = status
                    evidence.append(
                        f"{op}: C={self._fmt(comp)} vs parts "
                        f"{self._fmt(parts[0])}+{self._fmt(parts[1])} ({describe})"
                    )
                    continue
                per_op[op] = NOT_FALSIFIED
                evidence.append(f"{op}: witness did not replay")
                continue
            sampled = self._sample_identity(measure, op)
            if sampled is not None:
                per_op[op] = sampled[0]
                evidence.append(f"{op}: {sampled[1]}")
            else:
                per_op[op] = NOT_FALSIFIED
        return self._aggregate(measure, prop, per_op, evidence)

    def _check_w9(self, measure: str) -> PropertyVerdict:
        def gt(comp, parts):
            return float(comp) > float(parts[0]) + float(parts[1]) + (
                1e-9 if isinstance(comp, float) else 0)

        return self._relation_check(measure, "w9", _W9_WITNESSES, gt, "composite exceeds sum")

    def _check_notsup(self, measure: str) -> PropertyVerdict:
        def lt(comp, parts):
            return float(comp) < float(parts[0]) + float(parts[1]) - (
                1e-9 if isinstance(comp, float) else 0)

        return self._relation_check(measure, "notsup", _NOTSUP_WITNESSES, lt,
                                    "composite below sum")

    def _check_additive(self, measure: str) -> PropertyVerdict:
        def ne(comp, parts):
            total = float(parts[0]) + float(parts[1])
            return abs(float(comp) - total) > 1e-9

        return self._relation_check(measure, "additive", _NONADDITIVE_WITNESSES, ne,
                                    "composite differs from sum")

    def _aggregate(self, measure: str, prop: str, per_op: dict[str, str],
                   evidence: list[str], info: str | None = None) -> PropertyVerdict:
        statuses = set(per_op.values())
        status = statuses.pop() if len(statuses) == 1 else "Mixed"
        return PropertyVerdict(measure, prop, status, per_operator=per_op,
                               evidence=evidence, budget_used=len(self.pool()), info=info)


# --- public entry points ----------------------------------------------------------


def check(measure: str, prop: str, config: HarnessConfig | None = None) -> PropertyVerdict:
    """Evaluate one (measure, property) cell."""
    return Harness(config).check(measure, prop)


@dataclass
class Report:
    verdicts: dict[str, dict[str, PropertyVerdict]]
    config: HarnessConfig

    def cell(self, measure: str, prop: str) -> PropertyVerdict:
        return self.verdicts[measure][prop]

    def to_dict(self) -> dict:
        return {
            "seed": self.config.seed,
            "budget": self.config.search_budget,
            "cells": [
                self.verdicts[m][p].to_dict()
                for m in MEASURE_IDS
                for p in PROPERTY_IDS
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        abbrev = {CONFIRMED: "C", FALSIFIED: "F", NOT_FALSIFIED: "N", THEOREM: "T", "Mixed": "*"}
        width = max(len(p) for p in PROPERTY_IDS) + 1
        head = " " * width + " ".join(f"{m:>5}" for m in MEASURE_IDS)
        lines = [head, "-" * len(head)]
        for prop in PROPERTY_IDS:
            row = [f"{prop:<{width}}"]
            for m in MEASURE_IDS:
                row.append(f"{abbrev[self.verdicts[m][prop].status]:>5}")
            lines.append(" ".join(row))
        lines.append("")
        lines.append("C=confirmed-by-witness  F=falsified  N=not-falsified  "
                     "T=theorem-verified  *=operator-dependent")
        for prop in OPERATOR_SCOPED:
            for m in MEASURE_IDS:
                verdict = self.verdicts[m][prop]
                if verdict.status == "Mixed" and verdict.per_operator:
                    ops = ", ".join(f"{op}:{abbrev[s]}" for op, s in verdict.per_operator.items())
                    lines.append(f"  {m}/{prop}: {ops}")
        return "\n".join(lines) + "\n"


def full_report(config: HarnessConfig | None = None) -> Report:
    """Populate the full 17 x 14 verdict grid."""
    harness = Harness(config)
    verdicts: dict[str, dict[str, PropertyVerdict]] = {}
    for measure in MEASURE_IDS:
        verdicts[measure] = {}
        for prop in PROPERTY_IDS:
            verdicts[measure][prop] = harness.check(measure, prop)
    return Report(verdicts, harness.config)


def load_expected_table(path: str | None = None) -> dict:
    """The shipped encoding of the reference verdict tables, or a file.

    ``None`` or the literal ``"builtin"`` selects the packaged table.
    """
    if path is None or path == "builtin":
        text = (resources.files("wfc") / "data" / "tables.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _status_matches(prop: str, expected: str, status: str) -> bool:
    if prop == "minimum":
        return status == CONFIRMED if expected == "yes" else status == FALSIFIED
    existential = prop in EXISTENTIAL
    if expected == "yes":
        if existential:
            return status == CONFIRMED
        return status in (NOT_FALSIFIED, THEOREM)
    if existential:
        return status in (NOT_FALSIFIED, THEOREM)
    return status == FALSIFIED


@dataclass(frozen=True)
class Mismatch:
    measure: str
    prop: str
    operator: str | None
    expected: str
    observed: str

    def __str__(self) -> str:
        where = f"{self.measure}/{self.prop}"
        if self.operator:
            where += f"[{self.operator}]"
        return f"{where}: expected {self.expected}, observed {self.observed}"


def compare_to_expected(report: Report, expected: dict) -> list[Mismatch]:
    """Check every report cell against the expected yes/no table."""
    mismatches: list[Mismatch] = []
    for measure, row in expected.items():
        for prop, want in row.items():
            verdict = report.cell(measure, prop)
            if isinstance(want, dict):
                per_op = verdict.per_operator or {}
                for op, op_want in want.items():
                    status = per_op.get(op, verdict.status)
                    if not _status_matches(prop, op_want, status):
                        mismatches.append(Mismatch(measure, prop, op, op_want, status))
            elif prop in OPERATOR_SCOPED and verdict.per_operator:
                for op, status in verdict.per_operator.items():
                    if not _status_matches(prop, want, status):
                        mismatches.append(Mismatch(measure, prop, op, want, status))
            else:
                if not _status_matches(prop, want, verdict.status):
                    mismatches.append(Mismatch(measure, prop, None, want, verdict.status))
    return mismatches
