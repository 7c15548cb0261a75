"""Minimal static SVG line charts for result tables.

No chart dependencies: CSV is the primary output and these plots are quick
visual checks.  On log axes, non-positive values are clamped to the axis
floor (a decade below the smallest positive datum) so zero minimizers still
render with finite coordinates.
"""

from __future__ import annotations

import math

from .table import ResultTable

_PALETTE = [
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
]

_MARGIN = (56.0, 16.0, 44.0, 14.0)  # left, right, bottom, top


def _series_from_table(table: ResultTable, x: str, ys, series_by):
    series = []
    if series_by is None:
        xs = [float(v) for v in table.column(x)]
        for y in ys:
            series.append((y, xs, [float(v) for v in table.column(y)]))
        return series
    keys = []
    for v in table.column(series_by):
        if v not in keys:
            keys.append(v)
    xcol = table.column(x)
    by = table.column(series_by)
    for key in keys:
        rows = [i for i, v in enumerate(by) if v == key]
        xs = [float(xcol[i]) for i in rows]
        for y in ys:
            ycol = table.column(y)
            series.append((f"{y} [{series_by}={key}]", xs, [float(ycol[i]) for i in rows]))
    return series


def _axis_transform(values, log: bool):
    finite = [v for v in values if math.isfinite(v)]
    if log:
        positive = [v for v in finite if v > 0]
        floor = min(positive) / 10.0 if positive else 1e-12
        pts = [math.log10(max(v, floor)) for v in finite]
        lo, hi = min(pts), max(pts)
    else:
        floor = None
        lo, hi = min(finite), max(finite)
    if hi - lo < 1e-300:
        lo, hi = lo - 0.5, hi + 0.5

    def to_unit(v):
        if log:
            v = math.log10(max(v, floor))
        return (v - lo) / (hi - lo)

    return to_unit, lo, hi


def _ticks(lo: float, hi: float, log: bool):
    if log:
        first, last = math.ceil(lo), math.floor(hi)
        decades = list(range(first, last + 1))
        stride = max(1, len(decades) // 8)
        return [(d, f"1e{d}") for d in decades[::stride]] or [(lo, f"1e{lo:.1f}")]
    ticks = []
    for k in range(5):
        v = lo + (hi - lo) * k / 4
        ticks.append((v, f"{v:.4g}"))
    return ticks


def render_svg(
    table: ResultTable,
    path,
    x: str,
    ys,
    series_by: str | None = None,
    log_x: bool = False,
    log_y: bool = False,
    title: str = "",
    width: int = 720,
    height: int = 440,
) -> None:
    ys = list(ys)
    series = _series_from_table(table, x, ys, series_by)
    all_x = [v for _, xs, _ in series for v in xs]
    all_y = [v for _, _, yv in series for v in yv]
    if not all_x:
        raise ValueError("nothing to plot: table has no rows")

    tx, xlo, xhi = _axis_transform(all_x, log_x)
    ty, ylo, yhi = _axis_transform(all_y, log_y)
    ml, mr, mb, mt = _MARGIN
    plot_w = width - ml - mr
    plot_h = height - mb - mt

    def px(v):
        return ml + tx(v) * plot_w

    def py(v):
        return mt + (1.0 - ty(v)) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{plot_w:.1f}" height="{plot_h:.1f}" '
        f'fill="none" stroke="#444"/>',
    ]
    if title:
        parts.append(f'<text x="{width / 2:.1f}" y="{mt - 3:.1f}" text-anchor="middle">{title}</text>')

    for v, label in _ticks(xlo, xhi, log_x):
        raw = 10.0**v if log_x else v
        cx = px(raw)
        parts.append(f'<line x1="{cx:.1f}" y1="{mt + plot_h:.1f}" x2="{cx:.1f}" '
                     f'y2="{mt + plot_h + 4:.1f}" stroke="#444"/>')
        parts.append(f'<text x="{cx:.1f}" y="{mt + plot_h + 16:.1f}" '
                     f'text-anchor="middle">{label}</text>')
    for v, label in _ticks(ylo, yhi, log_y):
        raw = 10.0**v if log_y else v
        cy = py(raw)
        parts.append(f'<line x1="{ml - 4:.1f}" y1="{cy:.1f}" x2="{ml:.1f}" '
                     f'y2="{cy:.1f}" stroke="#444"/>')
        parts.append(f'<text x="{ml - 6:.1f}" y="{cy + 3:.1f}" text-anchor="end">{label}</text>')
    parts.append(f'<text x="{width / 2:.1f}" y="{height - 4:.1f}" text-anchor="middle">{x}</text>')

    for idx, (label, xs, yv) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(
            f"{px(a):.2f},{py(b):.2f}"
            for a, b in zip(xs, yv)
            if math.isfinite(a) and math.isfinite(b)
        )
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = mt + 14 + 14 * idx
        parts.append(f'<line x1="{ml + 8:.1f}" y1="{ly - 4:.1f}" x2="{ml + 28:.1f}" '
                     f'y2="{ly - 4:.1f}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{ml + 32:.1f}" y="{ly:.1f}">{label}</text>')

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
