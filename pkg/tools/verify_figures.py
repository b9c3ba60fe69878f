"""Cross-check fixture scores against the figure captions (development aid)."""

from __future__ import annotations

import pathlib
import sys
from fractions import Fraction as F

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from wfc.formats import parse_native  # noqa: E402
from wfc.metrics import MEASURES  # noqa: E402

FIX = pathlib.Path(__file__).resolve().parent.parent / "src" / "wfc" / "fixtures"


def load(name):
    return parse_native((FIX / f"{name}.wfnet.json").read_text())


# (fixture, measure, expected) — floats compared at 1e-4
EXPECTED = [
    ("W0", "size", 3), ("W0", "cnc", F(2, 3)), ("W0", "diam", 3), ("W0", "dens", 1),
    ("W0", "cc", F(1, 2)), ("W0", "sep", 0), ("W0", "depth", 0), ("W0", "seq", 0),
    ("W1_size", "size", 3), ("W2_size", "size", 5), ("W3_size", "size", 5),
    ("W4_size", "size", 6),
    ("W1_MM", "mm", 0), ("W2_MM", "mm", 4), ("W3_MM", "mm", 4),
    ("W4_MM", "mm", 2), ("W5_MM", "mm", 0),
    ("W1_CH", "ch", 0.985228136), ("W2_CH", "ch", 0.0), ("W3_CH", "ch", 0.0),
    ("W4_CH", "ch", 0.9182958), ("W5_CH", "ch", 0.9182958),
    ("W6_CH", "ch", 1.0), ("W7_CH", "ch", 0.9182958),
    ("W_and_CC", "cc", F(34, 45)),
    ("W1_CC", "cc", F(13, 16)), ("W2_CC", "cc", F(1, 2)),
    ("W3_CC", "cc", F(1, 2)), ("W4_CC", "cc", F(13, 16)),
    ("W7_CC", "cc", F(1, 2)),
    ("W1_ts", "ts", 1), ("W2_ts", "ts", 2), ("W3_ts", "ts", 1), ("W4_ts", "ts", 2),
    ("W1_sep", "sep", 0), ("W2_sep", "sep", 1), ("W3_sep", "sep", 0),
    ("W7_sep", "sep", F(1, 4)), ("W8_sep", "sep", F(1, 4)),
    ("W9_sep", "sep", F(1, 4)), ("W10_sep", "sep", F(1, 2)),
    ("W5_sep", "sep", F(1, 4)), ("W6_sep", "sep", 1),
    ("W1_cfc", "cfc", 0), ("W2_cfc", "cfc", 2), ("W3_cfc", "cfc", 2),
    ("W4_cfc", "cfc", 1), ("W5_cfc", "cfc", 4),
    ("wfmax1", "mcd", 2), ("wfmax2", "mcd", 3), ("wfmax3", "mcd", 3),
    ("wfmax4", "mcd", 3), ("wfmax5", "mcd", 4),
    ("wfseq1", "seq", F(5, 6)), ("wfseq2", "seq", F(1, 2)),
    ("wfseq4", "seq", 1), ("wfseq5", "seq", 1),
    ("wfseq6", "seq", 1), ("wfseq7", "seq", F(7, 8)),
    ("wfavg1", "acd", 2), ("wfavg2", "acd", 3), ("wfavg3", "acd", 3),
    ("wfavg5", "acd", 4), ("wfavg6", "acd", 2),
    ("wfavg7", "acd", F(8, 3)), ("wfavg8", "acd", F(7, 2)),
    ("W1_depth", "depth", 1), ("W2_depth", "depth", 1), ("W3_depth", "depth", 2),
    ("W4_depth", "depth", 1), ("W5_depth", "depth", 2), ("W6_depth", "depth", 1),
    ("Wsub3_depth", "depth", 1),
    ("W1_diam", "diam", 3), ("W2_diam", "diam", 3), ("W3_diam", "diam", 5),
    ("W4_diam", "diam", 7), ("W5_diam", "diam", 9),
    ("W1_cyc", "cyc", 0), ("W2_cyc", "cyc", 0), ("W3_cyc", "cyc", F(1, 3)),
    ("W4_cyc", "cyc", F(1, 3)), ("W5_cyc", "cyc", 0),
    ("W1_cnc", "cnc", F(2, 3)), ("W2_cnc", "cnc", 1), ("W3_cnc", "cnc", F(8, 5)),
    ("W4_cnc", "cnc", F(4, 5)),
    ("W1_dens", "dens", 1), ("W2_dens", "dens", F(1, 2)),
    ("W3_dens", "dens", F(1, 2)), ("W4_dens", "dens", F(1, 3)),
    ("W1_dup", "dup", 0), ("W2_dup", "dup", 2), ("W3_dup", "dup", 0),
    ("W1_esf", "esf", 0), ("W2_esf", "esf", 2), ("W3_esf", "esf", 0),
    ("W4_esf", "esf", 2),
    ("M_example", "size", 25),
]


def main() -> None:
    bad = 0
    for name, measure, expect in EXPECTED:
        net = load(name)
        got = MEASURES[measure](net).value
        if isinstance(expect, float):
            ok = abs(float(got) - expect) < 1e-4
        else:
            ok = got == F(expect)
        if not ok:
            bad += 1
            print(f"MISMATCH {name}.{measure}: expected {expect}, got {got}")
    print(f"{len(EXPECTED) - bad}/{len(EXPECTED)} figure values match")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
