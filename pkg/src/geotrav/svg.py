"""Static SVG drawing of a virtual graph: lattice grey, graph edges black,
connectors dashed, crossing edges red, optional report order labels."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .virtualgraph import EdgeKind, VirtualGraph

STYLE = {
    EdgeKind.LATTICE: 'stroke="#999" stroke-width="0.02"',
    EdgeKind.GRAPH: 'stroke="#000" stroke-width="0.025"',
    EdgeKind.CONNECTOR: 'stroke="#555" stroke-width="0.015" stroke-dasharray="0.06 0.04"',
}


def render(vg: VirtualGraph, order: list[int] | None = None, scale: int = 60) -> str:
    xs = [float(p.x) for p in vg.points]
    ys = [float(p.y) for p in vg.points]
    x0, x1 = min(xs) - 0.5, max(xs) + 0.5
    y0, y1 = min(ys) - 0.5, max(ys) + 0.5
    w, h = x1 - x0, y1 - y0

    def pt(v):
        # flip y so the drawing reads with y pointing up
        return f"{xs[v] - x0:.4f}", f"{y1 - ys[v]:.4f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * scale:.0f}" height="{h * scale:.0f}" '
        f'viewBox="0 0 {w:.4f} {h:.4f}">',
        '<rect width="100%" height="100%" fill="#fff"/>',
    ]
    for kind in (EdgeKind.LATTICE, EdgeKind.CONNECTOR, EdgeKind.GRAPH):
        out.append(f'<g class="{kind.value}">')
        for u, v in vg.edges(kind):
            (ax, ay), (bx, by) = pt(u), pt(v)
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {STYLE[kind]}/>')
        out.append("</g>")
    out.append('<g class="crossing">')
    for u, v in vg.crossing:
        (ax, ay), (bx, by) = pt(u), pt(v)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#d00" stroke-width="0.025"/>')
    out.append("</g>")
    out.append('<g class="vertices">')
    for v in range(vg.n_real):
        cx, cy = pt(v)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="0.05" fill="#000"/>')
    out.append("</g>")
    if order:
        out.append('<g class="order" font-size="0.18" fill="#06c">')
        for i, v in enumerate(order, 1):
            cx, cy = pt(v)
            out.append(f'<text x="{cx}" y="{cy}" dx="0.06" dy="-0.06">{escape(str(i))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
