"""Matplotlib renderings saved next to the delimited reports.

Every renderer writes a PNG to the given path and returns the path; the
Agg backend keeps this usable in headless runs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import BoundsRow
from .setsystem import ShatterProfile
from .suites import SuiteReport


def save_table1_figure(rows: Sequence[BoundsRow], path: str | Path) -> Path:
    """Draw the interleaved bound table; gap pairs are printed in red."""
    path = Path(path)
    width = max(len(r.entries) for r in rows)
    fig, ax = plt.subplots(figsize=(1.1 * (width + 1), 0.5 * (len(rows) + 1)))
    ax.set_axis_off()
    header = ["b"]
    for i in range(width // 2):
        header.append(f"u{i}-1")
        header.append(f"l{i + 1}")
    for col, label in enumerate(header):
        ax.text(col, len(rows), label, ha="center", va="center", fontweight="bold")
    for rix, row in enumerate(rows):
        y = len(rows) - 1 - rix
        ax.text(0, y, str(row.b), ha="center", va="center")
        for eix, value in enumerate(row.entries):
            gap = row.gap_flags[eix // 2]
            ax.text(
                eix + 1, y, str(value),
                ha="center", va="center",
                color="red" if gap else "black",
            )
    ax.set_xlim(-0.5, width + 0.5)
    ax.set_ylim(-0.5, len(rows) + 0.5)
    ax.set_title("upper/lower bound families per trace size b (gaps in red)")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_suite_figure(report: SuiteReport, path: str | Path) -> Path:
    """One horizontal bar per check, green for pass, red for fail."""
    path = Path(path)
    names = [c.name for c in report.checks]
    colors = ["tab:green" if c.passed else "tab:red" for c in report.checks]
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(names) + 1.2))
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xticks([])
    ax.set_title(f"suite {report.suite}: {'all checks pass' if report.passed else 'failures present'}")
    for i, check in enumerate(report.checks):
        ax.text(0.02, i, "PASS" if check.passed else "FAIL", va="center", color="white", fontweight="bold")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_profile_figure(profiles: Mapping[str, ShatterProfile], path: str | Path) -> Path:
    """Step plot of one or more shatter profiles against the 2^b ceiling."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    longest = 0
    for label, profile in profiles.items():
        xs = list(range(len(profile)))
        ax.step(xs, list(profile), where="mid", marker="o", label=label)
        longest = max(longest, len(profile))
    if longest:
        xs = list(range(longest))
        ax.plot(xs, [min(2 ** b, max(max(p) for p in profiles.values())) for b in xs],
                linestyle="--", color="gray", label="2^b cap")
    ax.set_xlabel("subset size b")
    ax.set_ylabel("largest trace size")
    ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
