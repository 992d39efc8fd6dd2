"""Deterministic vector-graphic rendering of chart data.

SVG is assembled by hand from already-ordered data: the same input yields a
byte-identical document, which keeps rendered reports diffable in version
control. No plotting library gets a chance to inject timestamps or ids.
"""

from __future__ import annotations

import math

from .errors import DomainRuleViolation
from .analytics import MonthlySeries, ScatterPoint

WIDTH = 640
HEIGHT = 400
MARGIN_LEFT = 70
MARGIN_BOTTOM = 60
MARGIN_TOP = 20
MARGIN_RIGHT = 20

_PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
_PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
_X0 = MARGIN_LEFT
_Y0 = HEIGHT - MARGIN_BOTTOM


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _document(parts: list[str]) -> str:
    body = "\n".join(f"  {part}" for part in parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">\n'
        f"{body}\n</svg>\n"
    )


def _axes(x_label: str, y_label: str) -> list[str]:
    return [
        f'<line x1="{_X0}" y1="{_Y0}" x2="{_X0 + _PLOT_W}" y2="{_Y0}" stroke="black"/>',
        f'<line x1="{_X0}" y1="{_Y0}" x2="{_X0}" y2="{MARGIN_TOP}" stroke="black"/>',
        f'<text x="{_X0 + _PLOT_W // 2}" y="{HEIGHT - 12}" text-anchor="middle">'
        f"{_escape(x_label)}</text>",
        f'<text x="16" y="{MARGIN_TOP + _PLOT_H // 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + _PLOT_H // 2})">{_escape(y_label)}</text>',
    ]


def render_scatter(points: list[ScatterPoint]) -> str:
    """Planning scatter: effort on x, priority on y, circle area per count."""
    parts = _axes("effort (SP)", "priority")
    for p in range(1, 6):
        y = _Y0 - (p - 0.5) / 5 * _PLOT_H
        parts.append(
            f'<text x="{_X0 - 8}" y="{_fmt(y + 4)}" text-anchor="end">{p}</text>'
        )
    max_effort = max((pt.effort_sp for pt in points), default=0.0) or 1.0
    for pt in points:
        x = _X0 + pt.effort_sp / (max_effort * 1.1) * _PLOT_W
        y = _Y0 - (pt.priority - 0.5) / 5 * _PLOT_H
        radius = 6.0 * math.sqrt(pt.count)
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" '
            f'fill="steelblue" fill-opacity="0.7"/>'
        )
    return _document(parts)


def render_bars(counts: dict[str, int], x_label: str) -> str:
    """Bar chart of label -> open-item count, in the order given."""
    parts = _axes(x_label, "open items")
    if counts:
        max_count = max(counts.values()) or 1
        slot = _PLOT_W / len(counts)
        bar_w = slot * 0.6
        for i, (label, count) in enumerate(counts.items()):
            height = count / max_count * (_PLOT_H - 10)
            x = _X0 + i * slot + (slot - bar_w) / 2
            parts.append(
                f'<rect x="{_fmt(x)}" y="{_fmt(_Y0 - height)}" width="{_fmt(bar_w)}" '
                f'height="{_fmt(height)}" fill="steelblue"/>'
            )
            parts.append(
                f'<text x="{_fmt(x + bar_w / 2)}" y="{_Y0 + 16}" text-anchor="middle">'
                f"{_escape(label)}</text>"
            )
            parts.append(
                f'<text x="{_fmt(x + bar_w / 2)}" y="{_fmt(_Y0 - height - 4)}" '
                f'text-anchor="middle">{count}</text>'
            )
    return _document(parts)


def render_burden(series: MonthlySeries) -> str:
    """Monthly interest burden as a single line, one vertex per month."""
    parts = _axes("month", "minutes/month")
    if series.months:
        max_burden = max(series.burden_min_per_month) or 1.0
        n = len(series.months)
        coords = []
        for i, value in enumerate(series.burden_min_per_month):
            x = _X0 + (i + 0.5) / n * _PLOT_W
            y = _Y0 - value / (max_burden * 1.1) * _PLOT_H
            coords.append(f"{_fmt(x)},{_fmt(y)}")
        parts.append(
            f'<polyline points="{" ".join(coords)}" fill="none" '
            f'stroke="steelblue" stroke-width="2"/>'
        )
        for i, (year, month) in enumerate(series.months):
            x = _X0 + (i + 0.5) / n * _PLOT_W
            parts.append(
                f'<text x="{_fmt(x)}" y="{_Y0 + 16}" text-anchor="middle">'
                f"{year:04d}-{month:02d}</text>"
            )
    return _document(parts)


def render_chart(data, kind: str) -> str:
    """Render one chart kind; unknown kinds are an error, not a guess."""
    if kind == "lhf":
        return render_scatter(data)
    if kind == "components":
        return render_bars(data, "component")
    if kind == "quality-attributes":
        return render_bars(data, "quality attribute")
    if kind == "burden":
        return render_burden(data)
    raise DomainRuleViolation(f"unsupported chart kind {kind!r}", field="kind")
