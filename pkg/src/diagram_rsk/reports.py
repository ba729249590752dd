"""File output for verification reports: delimited tables plus figures.

Each report is written as a CSV of its per-shape table and a PNG bar chart
of the bucket contributions, named after the identity and its parameters.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def report_basename(report: dict) -> str:
    bits = [report["identity"].replace("-", "_"), f"k{report['k']}"]
    for key in ("n", "t", "family"):
        if key in report:
            bits.append(f"{key}{report[key]}")
    return "_".join(str(b).replace("/", "_").replace(".", "_") for b in bits)


def write_report_files(report: dict, outdir) -> tuple[Path, Path]:
    """Write <name>.csv and <name>.png under outdir; returns both paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    base = report_basename(report)
    csv_path = outdir / f"{base}.csv"
    png_path = outdir / f"{base}.png"

    has_f = any("f" in row for row in report["per_shape"])
    fields = ["shape"] + (["f"] if has_f else []) + ["m", "contribution"]
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in report["per_shape"]:
            writer.writerow({key: row.get(key, "") for key in fields})

    shapes = [row["shape"] for row in report["per_shape"]]
    values = [row["contribution"] for row in report["per_shape"]]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(shapes) + 2.0), 3.2))
    ax.bar(range(len(shapes)), values, color="#4878a8")
    ax.set_xticks(range(len(shapes)))
    ax.set_xticklabels(shapes, rotation=45, ha="right")
    ax.set_ylabel("bucket size")
    verdict = "pass" if report["pass"] else "FAIL"
    ax.set_title(
        f"{report['identity']} k={report['k']}: "
        f"lhs={report['lhs']} rhs={report['rhs']} [{verdict}]"
    )
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
