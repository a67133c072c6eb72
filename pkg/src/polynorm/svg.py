"""Tiny SVG renderer for 2-D results: inputs and witnesses on one canvas."""

from __future__ import annotations

from . import _hull
from .errors import InvalidParameter
from .geometry import IntegralPolytope

_SCALE = 40
_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _pix(x: int, y: int) -> tuple[int, int]:
    return _SCALE * x, -_SCALE * y  # SVG y grows downward


def render_svg(entries: list[tuple[str, IntegralPolytope]]) -> str:
    """One overlaid drawing per (label, polygon) pair; dimension 2 only."""
    if not entries:
        raise InvalidParameter("nothing to draw")
    for _, p in entries:
        if p.dim != 2:
            raise InvalidParameter("SVG rendering is available only for dimension 2")
    xs = [v[0] for _, p in entries for v in p.vertices]
    ys = [v[1] for _, p in entries for v in p.vertices]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    left, top = _pix(x0, y1)
    width, height = _SCALE * (x1 - x0), _SCALE * (y1 - y0)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{left} {top} {width} {height}" '
        f'width="{width}" height="{height}">',
        f'<rect x="{left}" y="{top}" width="{width}" height="{height}" fill="white"/>',
    ]
    for gx in range(x0, x1 + 1):
        px, _ = _pix(gx, 0)
        color = "#888888" if gx == 0 else "#dddddd"
        parts.append(f'<line x1="{px}" y1="{top}" x2="{px}" y2="{top + height}" '
                     f'stroke="{color}" stroke-width="1"/>')
    for gy in range(y0, y1 + 1):
        _, py = _pix(0, gy)
        color = "#888888" if gy == 0 else "#dddddd"
        parts.append(f'<line x1="{left}" y1="{py}" x2="{left + width}" y2="{py}" '
                     f'stroke="{color}" stroke-width="1"/>')
    for i, (label, p) in enumerate(entries):
        color = _PALETTE[i % len(_PALETTE)]
        verts = list(p.vertices)
        cycle = _hull.convex_polygon_ccw(verts) if len(verts) > 2 else verts
        pix = [_pix(x, y) for x, y in cycle]
        if len(pix) == 1:
            pass
        elif len(pix) == 2:
            (ax, ay), (bx, by) = pix
            parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                         f'stroke="{color}" stroke-width="3"/>')
        else:
            path = " ".join(f"{x},{y}" for x, y in pix)
            parts.append(f'<polygon points="{path}" fill="{color}" fill-opacity="0.15" '
                         f'stroke="{color}" stroke-width="2"/>')
        for x, y in pix:
            parts.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{color}"/>')
        lx, ly = pix[0]
        parts.append(f'<text x="{lx + 6}" y="{ly - 6}" font-size="14" '
                     f'fill="{color}">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
