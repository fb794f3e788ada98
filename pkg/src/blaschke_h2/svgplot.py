"""Minimal, byte-deterministic SVG line plots of :class:`CsvTable` columns."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .errors import DomainError
from .table import CsvTable

__all__ = ["PlotSpec", "render_svg", "emit_svg"]

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 70, 160, 40, 50
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: ``x`` column against each available ``y`` column."""

    x: str
    ys: tuple
    title: str = ""
    log_y: bool = False
    labels: dict = field(default_factory=dict)


def _num(v: float) -> str:
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def render_svg(table: CsvTable, spec: PlotSpec) -> str:
    """SVG document text. Columns absent from ``table`` are skipped, legend included."""
    if spec.x not in table.header:
        raise DomainError(f"no column {spec.x!r}")
    ys = [y for y in spec.ys if y in table.header]
    x = table.column(spec.x)
    series = []
    for y in ys:
        v = table.column(y)
        if spec.log_y:
            v = np.where(v > 0, v, np.nan)
            v = np.log10(v)
        if np.any(np.isfinite(v)):
            series.append((y, v))
    finite = [v[np.isfinite(v)] for _, v in series]
    y_lo = min((float(np.min(v)) for v in finite), default=0.0)
    y_hi = max((float(np.max(v)) for v in finite), default=1.0)
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    x_lo, x_hi = (float(np.min(x)), float(np.max(x))) if x.size else (0.0, 1.0)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def px(v):
        return LEFT + (v - x_lo) / (x_hi - x_lo) * pw

    def py(v):
        return TOP + (y_hi - v) / (y_hi - y_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH // 2}" y="22" text-anchor="middle" font-size="14">{escape(spec.title)}</text>',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        out.append(f'<line x1="{_num(px(t))}" y1="{TOP + ph}" x2="{_num(px(t))}" y2="{TOP + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{_num(px(t))}" y="{TOP + ph + 18}" text-anchor="middle">{t:.4g}</text>')
    for t in _ticks(y_lo, y_hi):
        label = f"1e{t:.2g}" if spec.log_y else f"{t:.4g}"
        out.append(f'<line x1="{LEFT - 5}" y1="{_num(py(t))}" x2="{LEFT}" y2="{_num(py(t))}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{_num(py(t) + 4)}" text-anchor="end">{label}</text>')
    out.append(f'<text x="{LEFT + pw // 2}" y="{HEIGHT - 10}" text-anchor="middle">{escape(spec.x)}</text>')
    for i, (name, v) in enumerate(series):
        color = COLORS[i % len(COLORS)]
        pts = " ".join(f"{_num(px(a))},{_num(py(b))}" for a, b in zip(x, v) if math.isfinite(b))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = TOP + 16 + 18 * i
        out.append(f'<line x1="{LEFT + pw + 12}" y1="{ly}" x2="{LEFT + pw + 32}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        label = spec.labels.get(name, name)
        out.append(f'<text x="{LEFT + pw + 38}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(table: CsvTable, spec: PlotSpec, path: str | Path) -> None:
    Path(path).write_bytes(render_svg(table, spec).encode("utf-8"))
