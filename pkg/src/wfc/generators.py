"""Parametric net families, the figure-fixture catalog and random block nets.

Each family realizes one documented construction plan and carries its
closed-form score; fixtures are checked-in data files transcribed from the
figures.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Mapping

from .compose import Operator, compose
from .errors import ParamOutOfRange, UnknownFixture
from .formats import parse_native
from .net import WorkflowNet, validate


# --- figure fixtures ---------------------------------------------------------

def fixture_names() -> list[str]:
    root = resources.files("wfc") / "fixtures"
    return sorted(
        entry.name[: -len(".wfnet.json")]
        for entry in root.iterdir()
        if entry.name.endswith(".wfnet.json")
    )


def build_fixture(name: str) -> WorkflowNet:
    """Load one transcribed figure net from the catalog."""
    path = resources.files("wfc") / "fixtures" / f"{name}.wfnet.json"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise UnknownFixture(name) from None
    return parse_native(text)


# --- parametric families ------------------------------------------------------

def _require(cond: bool, family: str, message: str) -> None:
    if not cond:
        raise ParamOutOfRange(family, message)


def _chain_arcs(k: int, prefix: str = "") -> tuple[list[str], list[str], list[tuple[str, str]]]:
    places = [f"{prefix}pi"] + [f"{prefix}p{i}" for i in range(1, k)] + [f"{prefix}po"]
    trans = [f"{prefix}t{i}" for i in range(1, k + 1)]
    arcs = []
    prev = f"{prefix}pi"
    for i in range(1, k + 1):
        arcs.append((prev, f"{prefix}t{i}"))
        nxt = f"{prefix}p{i}" if i < k else f"{prefix}po"
        arcs.append((f"{prefix}t{i}", nxt))
        prev = nxt
    return places, trans, arcs


def chain_net(k: int) -> WorkflowNet:
    """pi -> t1 -> p1 -> ... -> tk -> po, all transitions silent."""
    _require(k >= 1, "chain", "k >= 1")
    return validate(*_chain_arcs(k))


def bundle_net(k: int) -> WorkflowNet:
    """k parallel transitions between two places."""
    _require(k >= 1, "bundle", "k >= 1")
    arcs = []
    for i in range(1, k + 1):
        arcs.append(("pi", f"t{i}"))
        arcs.append((f"t{i}", "po"))
    return validate(["pi", "po"], [f"t{i}" for i in range(1, k + 1)], arcs)


def _family_mm(c: int, k: int) -> WorkflowNet:
    _require(c >= 1 and k >= 1, "mm", "c >= 1 and k >= 1")
    places, trans, arcs = _chain_arcs(k)
    places.remove("po")
    last = f"p{k - 1}" if k > 1 else "pi"
    arcs = [(u, v) for u, v in arcs if v != "po"] + [(f"t{k}", f"q{j}") for j in range(1, c + 2)]
    for j in range(1, c + 2):
        places.append(f"q{j}")
        trans.append(f"u{j}")
        arcs.append((f"q{j}", f"u{j}"))
        arcs.append((f"u{j}", "po"))
    places.append("po")
    del last
    return validate(places, trans, arcs)


def _family_ch(k: int, n: int) -> WorkflowNet:
    _require(k >= 1 and n >= 2, "ch", "k >= 1 and n >= 2")
    places, trans, arcs = _chain_arcs(k)
    places.remove("po")
    arcs = [(u, v) for u, v in arcs if v != "po"] + [(f"t{k}", "p")]
    places.append("p")
    for j in range(1, n + 1):
        trans += [f"s{j}", f"a{j}", f"b{j}", f"j{j}"]
        places += [f"x{j}", f"y{j}", f"x{j}e", f"y{j}e"]
        arcs += [
            ("p", f"s{j}"), (f"s{j}", f"x{j}"), (f"s{j}", f"y{j}"),
            (f"x{j}", f"a{j}"), (f"y{j}", f"b{j}"),
            (f"a{j}", f"x{j}e"), (f"b{j}", f"y{j}e"),
            (f"x{j}e", f"j{j}"), (f"y{j}e", f"j{j}"), (f"j{j}", "po"),
        ]
    places.append("po")
    return validate(places, trans, arcs)


def _family_cc_min(k: int) -> WorkflowNet:
    _require(k >= 1, "cc_min", "k >= 1")
    places = ["pi"] + [f"p{i}" for i in range(1, k + 1)] + ["pb", "po"]
    trans = [f"t{i}" for i in range(1, k + 2)]
    arcs = [("pi", "t1"), ("pb", "t1"), (f"t{k + 1}", "po"), (f"t{k + 1}", "pb")]
    for i in range(1, k + 1):
        arcs.append((f"t{i}", f"p{i}"))
        arcs.append((f"p{i}", f"t{i + 1}"))
    return validate(places, trans, arcs)


def _family_ts(c: int, k: int) -> WorkflowNet:
    _require(c >= 1 and k >= 1, "ts", "c >= 1 and k >= 1")
    places, trans, arcs = _chain_arcs(k)
    places.remove("po")
    arcs = [(u, v) for u, v in arcs if v != "po"]
    for j in range(1, c + 2):
        places += [f"q{j}", f"r{j}"]
        trans.append(f"u{j}")
        arcs += [(f"t{k}", f"q{j}"), (f"q{j}", f"u{j}"), (f"u{j}", f"r{j}"), (f"r{j}", "t")]
    trans.append("t")
    arcs.append(("t", "po"))
    places.append("po")
    return validate(places, trans, arcs)


def _family_cfc(c: int, k: int) -> WorkflowNet:
    _require(c >= 2 and k >= 1, "cfc", "c >= 2 and k >= 1")
    places = ["pi", "po"]
    trans = []
    arcs = []
    # branch 1 is a padded chain of k + 1 transitions
    trans.append("b1")
    arcs.append(("pi", "b1"))
    prev = "b1"
    for i in range(1, k + 1):
        places.append(f"p{i}")
        trans.append(f"t{i}")
        arcs.append((prev, f"p{i}"))
        arcs.append((f"p{i}", f"t{i}"))
        prev = f"t{i}"
    arcs.append((prev, "po"))
    for j in range(2, c + 1):
        trans.append(f"b{j}")
        arcs.append(("pi", f"b{j}"))
        arcs.append((f"b{j}", "po"))
    return validate(places, trans, arcs)


def _family_mcd(c: int, n: int) -> WorkflowNet:
    _require(c >= 1 and n >= 2, "mcd", "c >= 1 and n >= 2")
    places, trans, arcs = _chain_arcs(c)
    places.remove("po")
    arcs = [(u, v) for u, v in arcs if v != "po"] + [(f"t{c}", "p")]
    places.append("p")
    for j in range(1, n + 1):
        trans.append(f"u{j}")
        arcs.append(("p", f"u{j}"))
        arcs.append((f"u{j}", "po"))
    places.append("po")
    return validate(places, trans, arcs)


def _family_seq(c: int, k: int) -> WorkflowNet:
    """c chains of k transitions paired with c chains of k + 1 transitions.

    The uneven branch lengths realize the documented score 2/(2k + 1), which
    no even-armed choice can reach (any place-to-place chain has an even
    number of arcs).
    """
    _require(c >= 1 and k >= 1, "seq", "c >= 1 and k >= 1")
    places: list[str] = ["pi", "po"]
    trans: list[str] = []
    arcs: list[tuple[str, str]] = []
    for j in range(1, 2 * c + 1):
        length = k if j % 2 else k + 1
        prev = "pi"
        for i in range(1, length + 1):
            t = f"b{j}t{i}"
            trans.append(t)
            arcs.append((prev, t))
            if i < length:
                p = f"b{j}p{i}"
                places.append(p)
                arcs.append((t, p))
                prev = p
            else:
                arcs.append((t, "po"))
    return validate(places, trans, arcs)


def _family_acd(c: int, k: int) -> WorkflowNet:
    _require(c >= 2 and k >= 1, "acd", "c >= 2 and k >= 1")
    places, trans, arcs = _chain_arcs(k)
    places.remove("po")
    arcs = [(u, v) for u, v in arcs if v != "po"]
    for j in range(1, c + 1):
        places.append(f"q{j}")
        trans.append(f"u{j}")
        arcs += [(f"t{k}", f"q{j}"), (f"q{j}", f"u{j}"), (f"u{j}", "po")]
    places.append("po")
    return validate(places, trans, arcs)


def _family_sep(n: int, m: int) -> WorkflowNet:
    _require(n >= 1 and m >= 1, "sep", "n >= 1 and m >= 1")
    places = ["pi", "po"] + [f"p{i}" for i in range(1, n + 1)] + [f"q{i}" for i in range(1, m + 1)]
    trans = ["ta", "tb"] + [f"lp{i}" for i in range(1, n + 1)]
    arcs = [("pi", "ta"), ("ta", "p1"), ("ta", "q1"), (f"p{n}", "tb"), (f"q{m}", "tb"), ("tb", "po")]
    for i in range(1, n):
        trans.append(f"tp{i}")
        arcs += [(f"p{i}", f"tp{i}"), (f"tp{i}", f"p{i + 1}")]
    for i in range(1, m):
        trans.append(f"tq{i}")
        arcs += [(f"q{i}", f"tq{i}"), (f"tq{i}", f"q{i + 1}")]
    for i in range(1, n + 1):
        arcs += [(f"p{i}", f"lp{i}"), (f"lp{i}", f"p{i}")]
    return validate(places, trans, arcs)


def _family_depth_ladder(n: int) -> WorkflowNet:
    _require(n >= 1, "depth_ladder", "n >= 1")
    places = ["pi", "po"]
    trans = []
    arcs = [("pi", "s1")]
    for i in range(1, n + 1):
        trans.append(f"s{i}")
        places += [f"a{i}", f"c{i}"]
        arcs += [(f"s{i}", f"a{i}"), (f"s{i}", f"c{i}")]
        if i < n:
            arcs.append((f"c{i}", f"s{i + 1}"))
    arcs.append((f"c{n}", f"j{n}"))
    for i in range(n, 0, -1):
        trans.append(f"j{i}")
        arcs.append((f"a{i}", f"j{i}"))
        if i > 1:
            places.append(f"d{i}")
            arcs += [(f"j{i}", f"d{i}"), (f"d{i}", f"j{i - 1}")]
    arcs.append(("j1", "po"))
    return validate(places, trans, arcs)


def _family_cyc_loop(k: int) -> WorkflowNet:
    _require(k >= 2, "cyc_loop", "k >= 2")
    places, trans, arcs = _chain_arcs(k)
    trans.append("tl")
    arcs += [(f"p{k - 1}", "tl"), ("tl", f"p{k - 1}")]
    return validate(places, trans, arcs)


def _family_cyc_dense(k: int) -> WorkflowNet:
    _require(k >= 1, "cyc_dense", "k >= 1")
    places = ["pi", "po", "q0"] + [f"fp{i}" for i in range(1, k)] + ["pk"] \
        + [f"bq{i}" for i in range(1, k)]
    trans = ["t0", "s0"] + [f"ft{i}" for i in range(1, k + 1)] + [f"bs{i}" for i in range(1, k + 1)]
    arcs = [("pi", "t0"), ("t0", "q0"), ("pk", "s0"), ("s0", "po")]
    prev = "q0"
    for i in range(1, k + 1):
        arcs.append((prev, f"ft{i}"))
        nxt = f"fp{i}" if i < k else "pk"
        arcs.append((f"ft{i}", nxt))
        prev = nxt
    prev = "pk"
    for i in range(1, k + 1):
        arcs.append((prev, f"bs{i}"))
        nxt = f"bq{i}" if i < k else "q0"
        arcs.append((f"bs{i}", nxt))
        prev = nxt
    return validate(places, trans, arcs)


def _family_cnc_one(k: int) -> WorkflowNet:
    _require(k >= 1, "cnc_one", "k >= 1")
    places = ["pi", "po", "pl", "pr"]
    trans = ["d1", "d2"]
    arcs = [("pl", "d1"), ("pl", "d2"), ("d1", "pr"), ("d2", "pr")]
    prev = "pi"
    for i in range(1, k + 1):
        trans.append(f"l{i}")
        arcs.append((prev, f"l{i}"))
        nxt = f"lp{i}" if i < k else "pl"
        if i < k:
            places.append(nxt)
        arcs.append((f"l{i}", nxt))
        prev = nxt
    prev = "pr"
    for i in range(1, k + 1):
        trans.append(f"r{i}")
        arcs.append((prev, f"r{i}"))
        nxt = f"rp{i}" if i < k else "po"
        if i < k:
            places.append(nxt)
        arcs.append((f"r{i}", nxt))
        prev = nxt
    return validate(places, trans, arcs)


def _family_dup_chain(c: int) -> WorkflowNet:
    _require(c >= 0, "dup_chain", "c >= 0")
    places, trans, arcs = _chain_arcs(c + 1)
    labels = {t: "a" for t in trans}
    return validate(places, trans, arcs, labels)


def _family_esf(n: int, k: int) -> WorkflowNet:
    _require(n >= 1 and k >= 2, "esf", "n >= 1 and k >= 2")
    places, trans, arcs = _chain_arcs(n)
    places.remove("po")
    arcs = [(u, v) for u, v in arcs if v != "po"]
    trans += ["ts", "tj"]
    arcs.append((f"t{n}", "ps"))
    places.append("ps")
    arcs.append(("ps", "ts"))
    for j in range(1, k + 1):
        places.append(f"e{j}")
        arcs += [("ts", f"e{j}"), (f"e{j}", "tj")]
    arcs.append(("tj", "po"))
    places.append("po")
    return validate(places, trans, arcs)


def _entropy(p: Fraction) -> float:
    x = float(p)
    out = 0.0
    for part in (x, 1.0 - x):
        if part > 0:
            out -= part * math.log2(part)
    return out


@dataclass(frozen=True)
class Family:
    """A parametric construction plus its closed-form score."""

    name: str
    params: tuple[str, ...]
    build: Callable[..., WorkflowNet]
    measure: str
    score: Callable[..., Fraction | float]


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("mm", ("c", "k"), _family_mm, "mm", lambda c, k: Fraction(2 * (c + 1))),
        Family("ch", ("k", "n"), _family_ch, "ch", lambda k, n: _entropy(Fraction(1, n + 1))),
        Family("cc_fin", ("k",), chain_net, "cc", lambda k: Fraction(1, 2)),
        Family("cc_min", ("k",), _family_cc_min, "cc", lambda k: Fraction(1, 2 * k + 4)),
        Family("ts", ("c", "k"), _family_ts, "ts", lambda c, k: Fraction(c)),
        Family("cfc", ("c", "k"), _family_cfc, "cfc", lambda c, k: Fraction(c)),
        Family("mcd", ("c", "n"), _family_mcd, "mcd", lambda c, n: Fraction(n + 1)),
        Family("seq", ("c", "k"), _family_seq, "seq", lambda c, k: Fraction(2, 2 * k + 1)),
        Family("acd", ("c", "k"), _family_acd, "acd", lambda c, k: Fraction(2 * c + 1, 2)),
        Family("sep", ("n", "m"), _family_sep, "sep",
               lambda n, m: 1 - Fraction(n + 2, 3 * n + 2 * m)),
        Family("depth_ladder", ("n",), _family_depth_ladder, "depth", lambda n: Fraction(n)),
        Family("diam_chain", ("k",), chain_net, "diam", lambda k: Fraction(2 * k + 1)),
        Family("cyc_loop", ("k",), _family_cyc_loop, "cyc", lambda k: Fraction(1, k + 1)),
        Family("cyc_dense", ("k",), _family_cyc_dense, "cyc", lambda k: Fraction(k, k + 1)),
        Family("cnc_one", ("k",), _family_cnc_one, "cnc", lambda k: Fraction(1)),
        Family("cnc_chain", ("k",), chain_net, "cnc", lambda k: Fraction(2 * k, 2 * k + 1)),
        Family("dens_fan", ("k",), bundle_net, "dens", lambda k: Fraction(1)),
        Family("dens_chain", ("k",), chain_net, "dens", lambda k: Fraction(1, k)),
        Family("dup_chain", ("c",), _family_dup_chain, "dup", lambda c: Fraction(c)),
        Family("esf", ("n", "k"), _family_esf, "esf", lambda n, k: Fraction(k)),
    )
}


def build_family(name: str, **params: int) -> WorkflowNet:
    """Instantiate a named family at the given integer parameters."""
    if name not in FAMILIES:
        raise ParamOutOfRange(name, "unknown family")
    family = FAMILIES[name]
    missing = [p for p in family.params if p not in params]
    extra = [p for p in params if p not in family.params]
    if missing or extra:
        raise ParamOutOfRange(name, f"expected parameters {family.params}, got {tuple(params)}")
    return family.build(**params)


def family_score(name: str, **params: int) -> Fraction | float:
    return FAMILIES[name].score(**params)


# --- random block-structured nets ------------------------------------------------


@dataclass(frozen=True)
class RandomNetSpec:
    """Seeded recipe for a random block-structured net."""

    seed: int
    max_leaves: int = 6
    operator_weights: Mapping[Operator, float] = field(
        default_factory=lambda: {
            Operator.SEQ: 3.0,
            Operator.PAR: 2.0,
            Operator.XOR: 2.0,
            Operator.LOOP: 1.0,
        }
    )
    leaf_alphabet_size: int = 6

    def __post_init__(self):
        if self.max_leaves < 1:
            raise ValueError("max_leaves must be >= 1")
        if self.leaf_alphabet_size < 1:
            raise ValueError("leaf_alphabet_size must be >= 1")
        weights = dict(self.operator_weights)
        if any(w < 0 for w in weights.values()) or not any(w > 0 for w in weights.values()):
            raise ValueError("operator weights must be non-negative and not all zero")


def _leaf(rng: random.Random, alphabet: list[str | None]) -> WorkflowNet:
    label = rng.choice(alphabet)
    return validate(["pi", "po"], ["t"], [("pi", "t"), ("t", "po")], {"t": label})


def random_block_net(spec: RandomNetSpec) -> WorkflowNet:
    """Deterministic block-structured net: leaves are single transitions."""
    rng = random.Random(spec.seed)
    alphabet: list[str | None] = [chr(ord("a") + i) for i in range(spec.leaf_alphabet_size)]
    alphabet.append(None)  # the occasional silent leaf
    ops = [op for op in Operator if spec.operator_weights.get(op, 0) > 0]
    weights = [spec.operator_weights[op] for op in ops]

    def grow(leaves: int) -> WorkflowNet:
        if leaves == 1:
            return _leaf(rng, alphabet)
        op = rng.choices(ops, weights)[0]
        arity = 2 if leaves < 4 else rng.choice([2, 2, 3])
        arity = min(arity, leaves)
        cuts = sorted(rng.sample(range(1, leaves), arity - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [leaves])]
        return compose(op, [grow(s) for s in sizes])

    return grow(rng.randint(1, spec.max_leaves))
