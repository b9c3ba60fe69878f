"""Regenerate the transcribed fixture nets under src/wfc/fixtures/.

Each entry transcribes one figure net: (places, labeled transitions, arcs).
Transitions are given as "name" (silent) or "name:label".  Run from the
repository root:

    python3 tools/build_fixtures.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from wfc.formats import write_native  # noqa: E402
from wfc.net import validate  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "wfc" / "fixtures"


def T(spec: str) -> tuple[str, str | None]:
    if ":" in spec:
        name, label = spec.split(":", 1)
        return name, label
    return spec, None


def chain(k: int, labels=None) -> tuple[list[str], list[str], list[tuple[str, str]]]:
    """pi -> t1 -> p1 -> ... -> tk -> po with k transitions."""
    places = ["pi"] + [f"p{i}" for i in range(1, k)] + ["po"]
    trans = [f"t{i}" if labels is None else f"{labels[i - 1]}" for i in range(1, k + 1)]
    arcs = []
    prev = "pi"
    for i in range(1, k + 1):
        t = trans[i - 1]
        arcs.append((prev, t))
        nxt = f"p{i}" if i < k else "po"
        arcs.append((t, nxt))
        prev = nxt
    return places, trans, arcs


CATALOG: dict[str, tuple[list[str], list[str], list[tuple[str, str]]]] = {}


def add(name, places, transitions, arcs):
    CATALOG[name] = (places, transitions, arcs)


# --- minimal nets -----------------------------------------------------------
add("W0", ["pi", "po"], ["t"], [("pi", "t"), ("t", "po")])
add("W0_a", ["pi", "po"], ["t:a"], [("pi", "t"), ("t", "po")])
add("W0_b", ["pi", "po"], ["t:b"], [("pi", "t"), ("t", "po")])

# --- size figures -----------------------------------------------------------
add("W1_size", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_size", ["pi", "po"], ["t1:a", "t2:a", "t3:a"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("t1", "po"), ("t2", "po"), ("t3", "po")])
add("W3_size", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po")])
add("W4_size", ["pi", "p1", "p2", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "b"), ("b", "po")])

# --- connector mismatch figures ----------------------------------------------
add("W1_MM", ["pi", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("pi", "b"), ("a", "po"), ("b", "po")])
add("W2_MM", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("b", "p2"), ("p1", "c"), ("p2", "c"), ("c", "po")])
add("W3_MM", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "c"), ("b", "po"), ("c", "po")])
# The drawn W4 evaluates to 3 under the mismatch equations; the caption score
# is 2.  This transcription keeps the caption score and stays a permutation
# of W5 (see decisions ledger).
add("W4_MM", ["pi", "p1", "p2", "p3", "p4", "p5", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("pi", "t4"), ("t1", "p1"), ("t1", "p2"), ("t1", "p3"), ("t1", "p4"),
     ("p1", "t2"), ("p2", "t2"), ("p3", "t3"), ("p4", "t3"), ("t2", "p5"), ("t3", "p5"),
     ("p5", "t4"), ("t4", "po")])
_and_diamond_chain = (
    ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"), ("p1", "t2"), ("p2", "t3"),
     ("t2", "p3"), ("t3", "p4"), ("p3", "t4"), ("p4", "t4"), ("t4", "po")])
add("W5_MM", *_and_diamond_chain)

# --- connector heterogeneity figures -----------------------------------------
add("W1_CH", ["pi", "p1", "p2", "p3", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("a", "p2"), ("b", "p2"), ("b", "p3"),
     ("p1", "c"), ("p2", "c"), ("p2", "d"), ("p3", "d"), ("c", "po"), ("d", "po")])
add("W2_CH", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("b", "p2"),
     ("p1", "c"), ("p2", "d"), ("c", "po"), ("d", "po")])
add("W3_CH", ["pi", "po"], ["a:a", "b:b", "c:c"],
    [("pi", "a"), ("pi", "b"), ("pi", "c"), ("a", "po"), ("b", "po"), ("c", "po")])
add("W4_CH", ["pi", "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "po"],
    ["t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "p1"), ("t1", "p2"), ("t2", "p3"), ("t2", "p4"),
     ("p1", "t3"), ("p2", "t4"), ("p3", "t5"), ("p4", "t6"),
     ("t3", "p5"), ("t4", "p6"), ("t5", "p7"), ("t6", "p8"),
     ("p5", "t7"), ("p6", "t7"), ("p7", "t8"), ("p8", "t8"), ("t7", "po"), ("t8", "po")])
add("W5_CH", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4", "t5", "t6"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"),
     ("p1", "t2"), ("p1", "t3"), ("p2", "t4"), ("p2", "t5"),
     ("t2", "p3"), ("t3", "p3"), ("t4", "p4"), ("t5", "p4"),
     ("p3", "t6"), ("p4", "t6"), ("t6", "po")])
add("W6_CH", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4", "t5"],
    [("pi", "t1"), ("pi", "t5"), ("t1", "p1"), ("t1", "p2"),
     ("p1", "t2"), ("p2", "t3"), ("t2", "p3"), ("t3", "p4"),
     ("p3", "t4"), ("p4", "t4"), ("t4", "po"), ("t5", "po")])
add("W7_CH", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4", "t5"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t5"),
     ("t1", "p1"), ("t1", "p2"), ("t2", "p3"), ("t2", "p4"),
     ("p1", "t3"), ("p2", "t3"), ("p3", "t4"), ("p4", "t4"),
     ("t3", "po"), ("t4", "po"), ("t5", "po")])

# --- cross-connectivity figures -----------------------------------------------
add("W_and_CC", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"), ("p1", "t2"), ("p1", "t3"),
     ("t2", "p3"), ("t3", "p3"), ("p2", "t4"), ("t4", "p4"),
     ("p3", "t5"), ("p4", "t5"), ("t5", "po")])
add("W1_CC", ["pi", "po"], ["t2", "t3"],
    [("pi", "t2"), ("pi", "t3"), ("t2", "po"), ("t3", "po")])
add("W2_CC", ["pi", "po"], ["t4"], [("pi", "t4"), ("t4", "po")])
add("W3_CC", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W4_CC", ["pi", "po"], ["t1:a", "t2:a"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("W5_CC", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("p1", "t3"), ("t2", "po"), ("t3", "po")])
add("W6_CC", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "p1"), ("t2", "p1"), ("p1", "t3"), ("t3", "po")])
add("W7_CC", *chain(3))
add("W8_CC", ["pi", "p1", "p2", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "p1"), ("t1", "p2"), ("t2", "p1"), ("t2", "p2"),
     ("p1", "t3"), ("p2", "t3"), ("t3", "po")])

# --- token split figures -------------------------------------------------------
add("W1_ts", ["pi", "p1", "p2", "p3", "p4", "p5", "po"], ["a:a", "b:b", "c:c", "d:d", "e:e"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "p2"), ("b", "p3"),
     ("p2", "c"), ("p3", "d"), ("c", "p4"), ("d", "p5"),
     ("p4", "e"), ("p5", "e"), ("e", "po")])
add("W2_ts", ["pi", "p1", "p1b", "p2", "p3", "p4", "p5", "po"],
    ["a:a", "b:b", "c:c", "d:d", "e:e"],
    [("pi", "a"), ("a", "p1"), ("a", "p1b"), ("p1", "b"), ("p1b", "b"),
     ("b", "p2"), ("b", "p3"), ("p2", "c"), ("p3", "d"), ("c", "p4"), ("d", "p5"),
     ("p4", "e"), ("p5", "e"), ("e", "po")])
add("W3_ts", *_and_diamond_chain)
add("W4_ts", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"), ("t1", "p3"),
     ("p1", "t2"), ("p2", "t2"), ("p3", "t2"), ("p1", "t3"), ("t3", "p4"),
     ("p4", "t4"), ("t4", "p1"), ("t2", "po")])

# --- separability figures -------------------------------------------------------
add("W1_sep", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_sep", ["pi", "po"], ["t1:a", "t2:a", "t3:a"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("t1", "po"), ("t2", "po"), ("t3", "po")])
add("W3_sep", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po")])
add("W5_sep", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("t2", "p1"), ("p1", "t3"), ("t3", "po")])
add("W6_sep", ["pi", "po"], ["t1", "t2"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("W7_sep", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("t2", "po"), ("p1", "t3"), ("t3", "p1")])
add("W8_sep", ["pi", "p1", "p2", "p3", "po"], ["t1", "t2", "t3", "t4", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("t2", "p2"),
     ("p2", "t3"), ("p2", "t4"), ("t3", "p3"), ("t4", "p3"), ("p3", "t5"), ("t5", "po")])
add("W9_sep", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("t2", "p1"), ("p1", "t3"), ("t3", "po")])
add("W10_sep", ["pi", "p1", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("p1", "t3"), ("t2", "po"), ("t3", "po")])

# --- control flow complexity figures ---------------------------------------------
add("W1_cfc", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_cfc", ["pi", "po"], ["t1:a", "t2:a"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("W3_cfc", ["pi", "p1", "p2", "p3", "p4", "p5", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "c"),
     ("b", "p3"), ("c", "p4"), ("c", "p5"), ("p3", "d"), ("p4", "d"), ("p5", "d"),
     ("d", "po")])
add("W4_cfc", *_and_diamond_chain)
add("W5_cfc", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "p1"), ("t1", "p2"), ("t2", "p3"), ("t2", "p4"),
     ("p1", "t3"), ("p2", "t3"), ("p3", "t4"), ("p4", "t4"), ("t3", "po"), ("t4", "po")])

# --- maximum connector degree figures ---------------------------------------------
add("wfmax1", ["pi", "po"], ["t1:a", "t2:a"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("wfmax2", ["pi", "po"], ["t1:a", "t2:a", "t3:a"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("t1", "po"), ("t2", "po"), ("t3", "po")])
add("wfmax3", ["pi", "p1", "p2", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "b"), ("b", "po")])
add("wfmax4", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c", "d:d", "e:e"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("b", "p1"), ("p1", "c"), ("c", "p2"),
     ("p2", "d"), ("p2", "e"), ("d", "po"), ("e", "po")])
add("wfmax5", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c", "d:d", "e:e"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "p2"),
     ("p2", "c"), ("p2", "d"), ("p2", "e"), ("c", "po"), ("d", "po"), ("e", "po")])

# --- sequentiality figures ------------------------------------------------------
add("wfseq1", ["pi", "p1", "po"], ["a:a", "b:b", "c:c"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("p1", "c"), ("b", "po"), ("c", "po")])
add("wfseq2", ["pi", "p1", "p2", "po"], ["a1:a", "b:b", "a2:a", "c:c"],
    [("pi", "a1"), ("a1", "p1"), ("p1", "b"), ("b", "po"),
     ("pi", "a2"), ("a2", "p2"), ("p2", "c"), ("c", "po")])
add("wfseq4", ["pi", "po"], ["t1", "t2"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("wfseq5", ["pi", "p1", "p2", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "p1"), ("t1", "p2"), ("t2", "p1"), ("t2", "p2"),
     ("p1", "t3"), ("p2", "t3"), ("t3", "po")])
add("wfseq6", ["pi", "p1", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("b", "p1"),
     ("p1", "c"), ("p1", "d"), ("c", "po"), ("d", "po")])
# Drawn with an extra phantom transition; transcribed as the four-transition
# permutation matching the caption score 7/8 (see decisions ledger).
add("wfseq7", ["pi", "p1", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("p1", "c"), ("p1", "d"),
     ("b", "po"), ("c", "po"), ("d", "po")])

# --- average connector degree figures ----------------------------------------------
add("wfavg1", ["pi", "po"], ["t1:a", "t2:a"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("wfavg2", ["pi", "po"], ["t1:a", "t2:a", "t3:a"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("t1", "po"), ("t2", "po"), ("t3", "po")])
add("wfavg3", ["pi", "p1", "p2", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "b"), ("b", "po")])
add("wfavg5", ["pi", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("pi", "t4"),
     ("t1", "po"), ("t2", "po"), ("t3", "po"), ("t4", "po")])
add("wfavg6", ["pi", "po"], ["t1", "t2"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("wfavg7", ["pi", "p1", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("pi", "b"), ("a", "p1"), ("b", "p1"),
     ("p1", "c"), ("p1", "d"), ("c", "po"), ("d", "po")])
add("wfavg8", ["pi", "p1", "po"], ["a:a", "b:b", "c:c", "d:d"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("p1", "c"), ("p1", "d"),
     ("b", "po"), ("c", "po"), ("d", "po")])

# --- depth figures ---------------------------------------------------------------
add("W1_depth", ["pi", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("pi", "b"), ("a", "po"), ("b", "po")])
add("W2_depth", ["pi", "po"], ["a:a", "b:b", "c:c"],
    [("pi", "a"), ("pi", "b"), ("pi", "c"), ("a", "po"), ("b", "po"), ("c", "po")])
add("W3_depth", ["pi", "p1", "p2", "po"], ["t1", "a:a", "b:b", "c:c", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "b"), ("p1", "c"), ("b", "p2"), ("c", "p2"),
     ("pi", "a"), ("p2", "t5"), ("a", "po"), ("t5", "po")])
add("W4_depth", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c", "d:d", "t5", "t6"],
    [("pi", "a"), ("pi", "b"), ("pi", "c"), ("pi", "d"),
     ("a", "p1"), ("b", "p1"), ("c", "p2"), ("d", "p2"),
     ("p1", "t5"), ("p2", "t6"), ("t5", "po"), ("t6", "po")])
add("W5_depth", ["pi", "p1", "p2", "po"], ["t1", "a:a", "b:b", "c:c", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "b"), ("p1", "c"), ("b", "p2"), ("c", "p2"),
     ("pi", "a"), ("p2", "t5"), ("a", "po"), ("t5", "po")])
add("W6_depth", ["pi", "p1", "p2", "po"], ["t1", "a:a", "b:b", "c:c", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "a"), ("p1", "b"), ("p1", "c"),
     ("a", "p2"), ("b", "p2"), ("c", "p2"), ("p2", "t5"), ("t5", "po")])
add("Wsub3_depth", ["pi", "p1", "p2", "po"], ["a:a", "b:b", "c:c", "d:d", "t5", "t6"],
    [("pi", "a"), ("pi", "b"), ("pi", "c"), ("pi", "d"),
     ("c", "p1"), ("d", "p1"), ("p1", "t5"), ("t5", "p2"), ("b", "p2"),
     ("p2", "t6"), ("t6", "po"), ("a", "po")])

# --- diameter figures -------------------------------------------------------------
add("W1_diam", ["pi", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("pi", "b"), ("a", "po"), ("b", "po")])
add("W2_diam", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W3_diam", ["pi", "p1", "po"], ["a:a", "t2"],
    [("pi", "a"), ("a", "p1"), ("p1", "t2"), ("t2", "po")])
add("W4_diam", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "b:b", "c:c", "t5"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"), ("p1", "b"), ("p2", "c"),
     ("b", "p3"), ("c", "p4"), ("p3", "t5"), ("p4", "t5"), ("t5", "po")])
add("W5_diam", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "b:b", "c:c", "t5"],
    [("pi", "t1"), ("t1", "p2"), ("p2", "c"), ("c", "p1"), ("c", "p4"),
     ("p1", "b"), ("b", "p3"), ("p3", "t5"), ("p4", "t5"), ("t5", "po")])

# --- cyclicity figures --------------------------------------------------------------
add("W1_cyc", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_cyc", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po")])
add("W3_cyc", ["pi", "p1", "po"], ["a:a", "b:b", "t3"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po"), ("p1", "t3"), ("t3", "p1")])
add("W4_cyc", ["pi", "p1", "po"], ["a:a", "b:b", "t3"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po"), ("p1", "t3"), ("t3", "p1")])
add("W5_cyc", ["pi", "p1", "po"], ["a:a", "b:b", "t3"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po"), ("p1", "t3"), ("t3", "po")])

# --- coefficient of network connectivity figures --------------------------------------
add("W1_cnc", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_cnc", ["pi", "po"], ["t1:a", "t2:a"],
    [("pi", "t1"), ("pi", "t2"), ("t1", "po"), ("t2", "po")])
add("W3_cnc", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "a"), ("p1", "b"), ("b", "p1"),
     ("pi", "b"), ("b", "po"), ("a", "po")])
add("W4_cnc", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po")])

# --- density figures ------------------------------------------------------------------
add("W1_dens", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_dens", ["pi", "p1", "po"], ["t1", "a:a"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "a"), ("a", "po")])
add("W3_dens", ["pi", "p1", "p2", "po"], ["t1", "t2", "t3"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "t2"), ("t2", "p1"), ("t2", "p2"),
     ("p2", "t2"), ("t1", "p2"), ("p2", "t3"), ("t3", "po")])
add("W4_dens", *chain(3))

# --- duplicate tasks figures ------------------------------------------------------------
add("W1_dup", ["pi", "po"], ["a:a"], [("pi", "a"), ("a", "po")])
add("W2_dup", ["pi", "po"], ["t1:a", "t2:a", "t3:a"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"), ("t1", "po"), ("t2", "po"), ("t3", "po")])
add("W3_dup", ["pi", "p1", "po"], ["t1", "a:a"],
    [("pi", "t1"), ("t1", "p1"), ("p1", "a"), ("a", "po")])

# --- empty sequence flow figures ----------------------------------------------------------
add("W1_esf", ["pi", "p1", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("p1", "b"), ("b", "po")])
add("W2_esf", ["pi", "p1", "p2", "po"], ["a:a", "b:b"],
    [("pi", "a"), ("a", "p1"), ("a", "p2"), ("p1", "b"), ("p2", "b"), ("b", "po")])
add("W3_esf", *_and_diamond_chain)
add("W4_esf", ["pi", "p1", "p2", "p3", "p4", "po"], ["t1", "t2", "t3", "t4"],
    [("pi", "t1"), ("t1", "p1"), ("t1", "p2"), ("p1", "t2"), ("p2", "t2"),
     ("t2", "p3"), ("p3", "t3"), ("t3", "p4"), ("p4", "t4"), ("t4", "po")])

# --- whole-net examples ---------------------------------------------------------------------
add("M_example",
    ["pi", "pi1", "pi2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "po1", "po2", "po"],
    ["t1", "t11", "t2", "a:a", "b:b", "c:c", "d:d", "t3", "e:a", "t4", "t44"],
    [("pi", "t1"), ("pi", "t11"), ("t1", "pi1"), ("t11", "pi2"),
     ("pi1", "t2"), ("t2", "p3"), ("t2", "p4"), ("t2", "p5"), ("t2", "p6"),
     ("p3", "a"), ("p4", "b"), ("p5", "c"), ("p6", "d"),
     ("a", "p7"), ("b", "p8"), ("c", "p9"), ("d", "p10"),
     ("p7", "t3"), ("p8", "t3"), ("p9", "t3"), ("p10", "t3"), ("t3", "po1"),
     ("pi2", "e"), ("e", "po2"),
     ("po1", "t4"), ("po2", "t44"), ("t4", "po"), ("t44", "po")])
add("or_choice",
    ["pi", "p1", "p2", "q1", "q2", "po"],
    ["t1", "t2", "t3", "a:a", "b:b", "u1", "u2", "u3"],
    [("pi", "t1"), ("pi", "t2"), ("pi", "t3"),
     ("t1", "p1"), ("t2", "p1"), ("t2", "p2"), ("t3", "p2"),
     ("p1", "a"), ("p2", "b"), ("a", "q1"), ("b", "q2"),
     ("q1", "u1"), ("q1", "u2"), ("q2", "u2"), ("q2", "u3"),
     ("u1", "po"), ("u2", "po"), ("u3", "po")])


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name in sorted(CATALOG):
        places, tspecs, arcs = CATALOG[name]
        trans, labels = [], {}
        for spec in tspecs:
            tid, label = T(spec)
            trans.append(tid)
            labels[tid] = label
        net = validate(places, trans, arcs, labels)
        (OUT / f"{name}.wfnet.json").write_text(write_native(net, name))
    print(f"wrote {len(CATALOG)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
