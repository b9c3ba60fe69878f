"""Render a verdict report to delimited text and a matplotlib figure."""

from __future__ import annotations

import csv
import io
import pathlib

from .metrics import MEASURE_IDS
from .properties import PROPERTY_IDS, Report

_STATUS_COLOR = {
    "ConfirmedByWitness": "#4caf50",
    "TheoremVerified": "#2e7d32",
    "NotFalsified": "#a5d6a7",
    "Falsified": "#e57373",
    "Mixed": "#ffb74d",
}

_STATUS_SHORT = {
    "ConfirmedByWitness": "C",
    "TheoremVerified": "T",
    "NotFalsified": "N",
    "Falsified": "F",
    "Mixed": "*",
}


def report_to_csv(report: Report) -> str:
    """One row per cell (and per operator sub-cell), comma delimited."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["measure", "property", "operator", "status", "evidence"])
    for measure in MEASURE_IDS:
        for prop in PROPERTY_IDS:
            verdict = report.cell(measure, prop)
            writer.writerow([measure, prop, "", verdict.status, "; ".join(verdict.evidence)])
            if verdict.per_operator:
                for op, status in verdict.per_operator.items():
                    writer.writerow([measure, prop, op, status, ""])
    return buf.getvalue()


def render_report_figure(report: Report, path: str | pathlib.Path) -> None:
    """Draw the 17 x 14 verdict grid as a color-coded figure."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Patch, Rectangle

    fig, ax = plt.subplots(figsize=(12, 7))
    n_cols, n_rows = len(MEASURE_IDS), len(PROPERTY_IDS)
    for row, prop in enumerate(PROPERTY_IDS):
        for col, measure in enumerate(MEASURE_IDS):
            verdict = report.cell(measure, prop)
            color = _STATUS_COLOR.get(verdict.status, "#cccccc")
            ax.add_patch(Rectangle((col, n_rows - 1 - row), 1, 1,
                                   facecolor=color, edgecolor="white"))
            ax.text(col + 0.5, n_rows - 0.5 - row, _STATUS_SHORT.get(verdict.status, "?"),
                    ha="center", va="center", fontsize=9)
    ax.set_xlim(0, n_cols)
    ax.set_ylim(0, n_rows)
    ax.set_xticks([c + 0.5 for c in range(n_cols)])
    ax.set_xticklabels(MEASURE_IDS, rotation=45, ha="right")
    ax.set_yticks([n_rows - 0.5 - r for r in range(n_rows)])
    ax.set_yticklabels(PROPERTY_IDS)
    ax.set_title(f"Property verdicts (seed={report.config.seed}, "
                 f"budget={report.config.search_budget})")
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    legend = [Patch(facecolor=c, label=f"{_STATUS_SHORT[s]} = {s}")
              for s, c in _STATUS_COLOR.items()]
    ax.legend(handles=legend, loc="upper left", bbox_to_anchor=(1.01, 1.0), fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_files(report: Report, out_dir: str | pathlib.Path) -> list[pathlib.Path]:
    """Write report.csv, report.json and verdicts.png under out_dir."""
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "report.csv"
    csv_path.write_text(report_to_csv(report))
    json_path = out / "report.json"
    json_path.write_text(report.to_json())
    png_path = out / "verdicts.png"
    render_report_figure(report, png_path)
    return [csv_path, json_path, png_path]
