"""Word-frequency reports and deterministic SVG rendering.

The word-cloud layout is a fixed grid (row-major, most frequent first) with
font size proportional to the square root of the count; no randomized or
collision-driven placement, so identical inputs render byte-identical SVG.
The ROC plot draws the chance diagonal plus one polyline per named curve.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from .corpus import LabeledDocument
from .errors import ConfigurationError, DataError
from .evaluation import RocCurve

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class FrequencyReport:
    """Ranked (token, count) pairs for one label; ties break lexicographically."""

    label: int
    entries: tuple[tuple[str, int], ...]
    top_k: int


@dataclass(frozen=True)
class SvgStyle:
    width: int = 640
    height: int = 480
    font_family: str = "monospace"
    max_font: int = 44
    min_font: int = 11


DEFAULT_STYLE = SvgStyle()


def word_frequency_report(
    docs: Sequence[LabeledDocument], label: int, top_k: int
) -> FrequencyReport:
    """Token counts over the preprocessed tokens of documents with ``label``."""
    if top_k < 1:
        raise ConfigurationError(f"top_k must be >= 1, got {top_k}")
    counts: dict[str, int] = {}
    for doc in docs:
        if doc.label != label:
            continue
        if doc.tokens is None:
            raise DataError(
                f"document {doc.id!r} has no tokens; preprocess before reporting"
            )
        for token in doc.tokens:
            counts[token] = counts.get(token, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return FrequencyReport(label=label, entries=tuple(ranked[:top_k]), top_k=top_k)


def frequency_to_csv(report: FrequencyReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["token", "count"])
    writer.writerows(report.entries)
    return buffer.getvalue()


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _svg_header(style: SvgStyle, title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">',
        f"<title>{title}</title>",
        f'<rect width="{style.width}" height="{style.height}" fill="white"/>',
    ]


def render_wordcloud_svg(report: FrequencyReport, style: SvgStyle = DEFAULT_STYLE) -> str:
    """Grid-placed word cloud; one text element per token."""
    if not report.entries:
        raise DataError("cannot render an empty frequency report")
    columns = math.ceil(math.sqrt(len(report.entries)))
    rows = math.ceil(len(report.entries) / columns)
    cell_w = style.width / columns
    cell_h = style.height / rows
    max_count = report.entries[0][1]
    parts = _svg_header(style, f"Top {len(report.entries)} tokens for label {report.label}")
    for i, (token, count) in enumerate(report.entries):
        size = max(
            style.min_font,
            style.max_font * math.sqrt(count / max_count),
        )
        x = (i % columns) * cell_w + cell_w / 2
        y = (i // columns) * cell_h + cell_h / 2
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="{style.font_family}" '
            f'font-size="{_fmt(size)}" fill="{color}" text-anchor="middle" '
            f'dominant-baseline="middle">{token}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_roc_svg(
    curves: Sequence[tuple[str, RocCurve]], style: SvgStyle = DEFAULT_STYLE
) -> str:
    """Chance diagonal plus one labeled polyline per (name, curve) pair."""
    if not curves:
        raise DataError("cannot render an empty ROC set")
    margin = 50
    plot_w = style.width - 2 * margin
    plot_h = style.height - 2 * margin

    def to_xy(fpr: float, tpr: float) -> tuple[float, float]:
        return margin + fpr * plot_w, margin + (1.0 - tpr) * plot_h

    parts = _svg_header(style, "ROC curves")
    x0, y0 = to_xy(0.0, 0.0)
    x1, y1 = to_xy(1.0, 1.0)
    parts.append(
        f'<rect x="{_fmt(min(x0, x1))}" y="{_fmt(min(y0, y1))}" width="{_fmt(plot_w)}" '
        f'height="{_fmt(plot_h)}" fill="none" stroke="black"/>'
    )
    dx0, dy0 = to_xy(0.0, 0.0)
    dx1, dy1 = to_xy(1.0, 1.0)
    parts.append(
        f'<line x1="{_fmt(dx0)}" y1="{_fmt(dy0)}" x2="{_fmt(dx1)}" y2="{_fmt(dy1)}" '
        f'stroke="gray" stroke-dasharray="6,4"/>'
    )
    for axis_value in (0.0, 0.5, 1.0):
        tick_x, _ = to_xy(axis_value, 0.0)
        _, tick_y = to_xy(0.0, axis_value)
        parts.append(
            f'<text x="{_fmt(tick_x)}" y="{_fmt(style.height - margin + 18)}" '
            f'font-family="{style.font_family}" font-size="11" '
            f'text-anchor="middle">{axis_value:.1f}</text>'
        )
        parts.append(
            f'<text x="{_fmt(margin - 22)}" y="{_fmt(tick_y + 4)}" '
            f'font-family="{style.font_family}" font-size="11" '
            f'text-anchor="middle">{axis_value:.1f}</text>'
        )
    parts.append(
        f'<text x="{_fmt(style.width / 2)}" y="{_fmt(style.height - 10)}" '
        f'font-family="{style.font_family}" font-size="13" '
        f'text-anchor="middle">false positive rate</text>'
    )
    for i, (name, curve) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        coords = " ".join(
            f"{_fmt(px)},{_fmt(py)}"
            for px, py in (to_xy(fpr, tpr) for fpr, tpr in curve.points)
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        legend_y = margin + 16 + 18 * i
        parts.append(
            f'<line x1="{_fmt(margin + plot_w - 170)}" y1="{_fmt(legend_y - 4)}" '
            f'x2="{_fmt(margin + plot_w - 146)}" y2="{_fmt(legend_y - 4)}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_fmt(margin + plot_w - 140)}" y="{_fmt(legend_y)}" '
            f'font-family="{style.font_family}" font-size="12">'
            f"{name} (AUC={curve.auc:.4f})</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
