"""Minimal standalone SVG line charts, no plotting dependencies."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence, Tuple

_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]

_WIDTH = 960
_HEIGHT = 600
_MARGIN_LEFT = 90
_MARGIN_RIGHT = 230
_MARGIN_TOP = 60
_MARGIN_BOTTOM = 80


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _tick_label(value: float, log: bool) -> str:
    if log:
        value = 10.0 ** value
    if value == 0.0:
        return "0"
    if abs(value) >= 1e4 or abs(value) < 1e-3:
        return f"{value:.2e}"
    return f"{value:.4g}"


def write_line_chart(
    path: str | Path,
    title: str,
    x_label: str,
    y_label: str,
    series: Sequence[Tuple[str, Sequence[float], Sequence[float]]],
    log_x: bool = False,
    log_y: bool = False,
) -> None:
    """Write a line chart; series entries are (label, xs, ys).

    With log axes, non-positive values in that coordinate are dropped from
    the plot (they have no finite position).
    """
    plot_left = _MARGIN_LEFT
    plot_right = _WIDTH - _MARGIN_RIGHT
    plot_top = _MARGIN_TOP
    plot_bottom = _HEIGHT - _MARGIN_BOTTOM

    cleaned = []
    for label, xs, ys in series:
        pts = []
        for x, y in zip(xs, ys):
            if log_x and x <= 0.0:
                continue
            if log_y and y <= 0.0:
                continue
            px = math.log10(x) if log_x else float(x)
            py = math.log10(y) if log_y else float(y)
            pts.append((px, py))
        if pts:
            cleaned.append((label, pts))
    if not cleaned:
        raise ValueError("no plottable points (all dropped by the log-axis filter?)")

    all_x = [p[0] for _, pts in cleaned for p in pts]
    all_y = [p[1] for _, pts in cleaned for p in pts]
    x_min, x_max = min(all_x), max(all_x)
    y_min, y_max = min(all_y), max(all_y)
    if x_max <= x_min:
        x_min, x_max = x_min - 1.0, x_max + 1.0
    if y_max <= y_min:
        y_min, y_max = y_min - 1.0, y_max + 1.0
    pad = 0.05 * (y_max - y_min)
    y_min -= pad
    y_max += pad

    def to_px(p):
        px = plot_left + (p[0] - x_min) / (x_max - x_min) * (plot_right - plot_left)
        py = plot_bottom - (p[1] - y_min) / (y_max - y_min) * (plot_bottom - plot_top)
        return px, py

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">'
    )
    out.append('<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>')
    out.append(
        f'<text x="{_WIDTH / 2:.1f}" y="32" text-anchor="middle" font-size="20" '
        f'font-family="Helvetica,Arial,sans-serif">{_escape(title)}</text>'
    )

    n_ticks = 6
    for i in range(n_ticks + 1):
        yv = y_min + (y_max - y_min) * i / n_ticks
        _, py = to_px((x_min, yv))
        out.append(
            f'<line x1="{plot_left}" y1="{py:.2f}" x2="{plot_right}" y2="{py:.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{plot_left - 8}" y="{py + 4:.2f}" text-anchor="end" font-size="12" '
            f'font-family="Helvetica,Arial,sans-serif">{_tick_label(yv, log_y)}</text>'
        )
    for i in range(n_ticks + 1):
        xv = x_min + (x_max - x_min) * i / n_ticks
        px, _ = to_px((xv, y_min))
        out.append(
            f'<line x1="{px:.2f}" y1="{plot_bottom}" x2="{px:.2f}" y2="{plot_bottom + 6}" '
            'stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{px:.2f}" y="{plot_bottom + 24}" text-anchor="middle" font-size="12" '
            f'font-family="Helvetica,Arial,sans-serif">{_tick_label(xv, log_x)}</text>'
        )

    out.append(
        f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" '
        'stroke="#000000" stroke-width="2"/>'
    )
    out.append(
        f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" y2="{plot_bottom}" '
        'stroke="#000000" stroke-width="2"/>'
    )

    legend_x = plot_right + 18
    legend_y = plot_top + 14
    for idx, (label, pts) in enumerate(cleaned):
        color = _COLORS[idx % len(_COLORS)]
        coords = " ".join(f"{to_px(p)[0]:.2f},{to_px(p)[1]:.2f}" for p in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{coords}"/>')
        ly = legend_y + idx * 22
        out.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 24}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{legend_x + 30}" y="{ly + 4}" font-size="13" '
            f'font-family="Helvetica,Arial,sans-serif">{_escape(label)}</text>'
        )

    out.append(
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{_HEIGHT - 18}" text-anchor="middle" '
        f'font-size="14" font-family="Helvetica,Arial,sans-serif">{_escape(x_label)}</text>'
    )
    mid_y = (plot_top + plot_bottom) / 2
    out.append(
        f'<text x="24" y="{mid_y:.1f}" text-anchor="middle" font-size="14" '
        f'font-family="Helvetica,Arial,sans-serif" transform="rotate(-90 24 {mid_y:.1f})">'
        f'{_escape(y_label)}</text>'
    )
    out.append("</svg>")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out) + "\n", encoding="utf-8")
