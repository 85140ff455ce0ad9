"""Standalone SVG drawing of an instance and a solution."""

from __future__ import annotations

from math import sqrt
from pathlib import Path

from .model import Instance, Solution, x_separator, y_separator

WIDTH = 480
HEIGHT = 480
MARGIN = 30
BOX_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _sectors(instance: Instance, solution: Solution):
    """Coordinate rectangles of the active sectors, as (x0, x1, y0, y1)."""
    if instance.n == 0 or not solution.matrix:
        return []
    out = []
    gaps, bounds = solution.line_gaps, solution.block_boundaries
    for i, row in enumerate(solution.matrix):
        for j, a in enumerate(row):
            if a == 0 or gaps[i] == gaps[i + 1] or bounds[j] == bounds[j + 1]:
                continue
            out.append((x_separator(instance, bounds[j]), x_separator(instance, bounds[j + 1]),
                        y_separator(instance, gaps[i + 1]), y_separator(instance, gaps[i])))
    return out


def render_svg_text(instance: Instance, solution: Solution | None) -> str:
    xs = [p.x for p in instance.points]
    ys = [p.y for p in instance.points]
    # zero-area boxes enclose nothing and are left out of the drawing
    boxes = [b for b in solution.boxes if not b.empty] if solution is not None else []
    sectors = _sectors(instance, solution) if solution is not None else []
    for b in boxes:
        xs += [b.x_lo, b.x_hi]
        ys += [b.y_lo, b.y_hi]
    x0, x1 = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y0, y1 = (min(ys), max(ys)) if ys else (0.0, 1.0)
    sx = (WIDTH - 2 * MARGIN) / ((x1 - x0) or 1.0)
    sy = (HEIGHT - 2 * MARGIN) / ((y1 - y0) or 1.0)

    def px(x):
        return MARGIN + (x - x0) * sx

    def py(y):
        return HEIGHT - MARGIN - (y - y0) * sy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" stroke="#444" stroke-width="1"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" '
        f'stroke="#444" stroke-width="1"/>',
    ]
    if solution is not None:
        out.append(f'<title>objective {solution.objective:g} ({solution.case_id})</title>')
    # sectors are paths so that <rect> is reserved for the boxes themselves
    for a, b, c, d in sectors:
        out.append(f'<path d="M{_fmt(px(a))},{_fmt(py(c))} H{_fmt(px(b))} V{_fmt(py(d))} '
                   f'H{_fmt(px(a))} Z" fill="#f2c94c" fill-opacity="0.25" stroke="none"/>')
    for idx, b in enumerate(boxes):
        color = BOX_COLORS[idx % len(BOX_COLORS)]
        out.append(f'<rect x="{_fmt(px(b.x_lo))}" y="{_fmt(py(b.y_hi))}" '
                   f'width="{_fmt((b.x_hi - b.x_lo) * sx)}" height="{_fmt((b.y_hi - b.y_lo) * sy)}" '
                   f'fill="none" stroke="{color}" stroke-width="2"/>')
    wmax = max((abs(p.w) for p in instance.points), default=1.0) or 1.0
    for p in instance.points:
        r = 2.0 + 6.0 * sqrt(abs(p.w) / wmax)
        fill = "#222" if p.w > 0 else "none"
        out.append(f'<circle cx="{_fmt(px(p.x))}" cy="{_fmt(py(p.y))}" r="{_fmt(r)}" '
                   f'fill="{fill}" stroke="#222" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(instance: Instance, solution: Solution | None, path: str | Path) -> None:
    Path(path).write_text(render_svg_text(instance, solution))
