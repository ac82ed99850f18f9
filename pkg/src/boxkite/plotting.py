"""Matplotlib figures for the report path: mandalas, census bars, similarity overlays."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402
import numpy as np  # noqa: E402

from .atlas import CensusReport, EmanationTable, SimilarityReport  # noqa: E402
from .render import Palette  # noqa: E402

# Fixed metadata keeps PNG bytes stable from run to run.
_PNG_META = {"Software": None}


def _image(table: EmanationTable, palette: Palette) -> np.ndarray:
    k, n = table.k, table.context.n
    img = np.empty((k, k, 3), dtype=np.uint8)
    img[:, :] = palette.background
    for r, row in enumerate(table.cells):
        for c, v in enumerate(row):
            if v is not None:
                img[r, c] = palette.color(v, n)
    return img


def mandala_axes(ax, table: EmanationTable, palette: Palette | None = None, labels: bool = True):
    ax.imshow(_image(table, palette or Palette()), interpolation="nearest")
    ax.set_title(f"N={table.context.n}  S={table.context.s}  ({table.filled} cells)")
    if labels and table.k <= 30:
        ticks = range(table.k)
        ax.set_xticks(ticks)
        ax.set_yticks(ticks)
        ax.set_xticklabels(table.lows, fontsize=6, rotation=90)
        ax.set_yticklabels(table.lows, fontsize=6)
    else:
        ax.set_xticks([])
        ax.set_yticks([])
    return ax


def save_mandala(table: EmanationTable, path: str | Path, palette: Palette | None = None,
                 annotate: bool = False) -> Path:
    """Render one table; ``annotate`` writes the cell values over small tables."""
    fig, ax = plt.subplots(figsize=(6, 6))
    mandala_axes(ax, table, palette)
    if annotate and table.k <= 14:
        for r, row in enumerate(table.cells):
            for c, v in enumerate(row):
                if v is not None:
                    ax.text(c, r, str(v), ha="center", va="center", fontsize=6)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return path


def save_census(report: CensusReport, path: str | Path) -> Path:
    s = [r.s for r in report.records]
    counts = [r.box_kite_count for r in report.records]
    full = [r.range_class == "full" for r in report.records]
    fig, ax = plt.subplots(figsize=(max(6, len(s) * 0.12), 3.5))
    ax.bar(s, counts, color=["tab:blue" if f else "tab:orange" for f in full])
    ax.set_xlabel("strut constant S")
    ax.set_ylabel("box-kites")
    ax.set_title(f"2^{report.n}-ions: {report.total_box_kites} box-kites")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return path


def save_similarity(coarse: EmanationTable, fine: EmanationTable, report: SimilarityReport,
                    path: str | Path, palette: Palette | None = None) -> Path:
    """Coarse and fine tables side by side, compared regions outlined and residue marked."""
    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 5.5))
    mandala_axes(left, coarse, palette, labels=False)
    mandala_axes(right, fine, palette, labels=False)
    for region in report.regions:
        (r0, r1), (c0, c1) = region.rows, region.cols
        ratio = region.matched / region.compared if region.compared else 1.0
        right.add_patch(Rectangle((c0 - 0.5, r0 - 0.5), c1 - c0, r1 - r0, fill=False,
                                  edgecolor="black" if ratio == 1.0 else "red", linewidth=0.8))
    if report.residue:
        rows = [cell["row"] for cell in report.residue]
        cols = [cell["col"] for cell in report.residue]
        right.scatter(cols, rows, s=4, c="black", marker="x", linewidths=0.5)
    fig.suptitle(f"{report.source} -> {report.target}: match ratio {report.match_ratio:.3f}")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return path
