"""Plain SVG drawing of a planar instance and, optionally, a solution tree.

Output is a pure function of its inputs: fixed palette, fixed number
formatting, no timestamps.
"""
from __future__ import annotations

from html import escape

import numpy as np

from .instance import Instance
from .spanning import Solution

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
TREE_COLOR = "#1f3fbf"
REP_COLOR = "#22aa22"
MARGIN = 0.05


class RenderError(ValueError):
    pass


def _num(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(inst: Instance, solution: Solution | None = None, width: int = 600) -> str:
    if inst.dim != 2:
        raise RenderError("render supports d=2 only")
    pts = np.concatenate([r.vertices for r in inst.regions])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-9))
    pad = MARGIN * span
    x0, x1 = lo[0] - pad, hi[0] + pad
    # SVG y grows downward; draw (x, -y)
    y0, y1 = -hi[1] - pad, -lo[1] + pad
    w, h = x1 - x0, y1 - y0
    height = max(1, int(round(width * h / w)))
    dot = span * 0.012
    stroke = span * 0.006

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}">',
        f'<rect x="{_num(x0)}" y="{_num(y0)}" width="{_num(w)}" height="{_num(h)}" fill="white"/>',
    ]
    if solution is not None:
        sp = solution.selection.points
        out.append(f'<g id="tree" stroke="{TREE_COLOR}" stroke-width="{_num(stroke)}">')
        for i, j in solution.tree.edges:
            out.append(f'<line x1="{_num(sp[i][0])}" y1="{_num(-sp[i][1])}" '
                       f'x2="{_num(sp[j][0])}" y2="{_num(-sp[j][1])}"/>')
        out.append("</g>")
    for i, r in enumerate(inst.regions):
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<g id="region-{i}" fill="{color}"><title>{escape(r.label)}</title>')
        for v in r.vertices:
            out.append(f'<circle cx="{_num(v[0])}" cy="{_num(-v[1])}" r="{_num(dot)}"/>')
        out.append("</g>")
    if solution is not None:
        out.append(f'<g id="representatives" fill="none" stroke="{REP_COLOR}" '
                   f'stroke-width="{_num(stroke)}">')
        for p in solution.selection.points:
            out.append(f'<circle cx="{_num(p[0])}" cy="{_num(-p[1])}" r="{_num(2 * dot)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
