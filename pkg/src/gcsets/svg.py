"""Static SVG incidence diagrams.

Display-only: coordinates are converted to floats here and nowhere else in
the package.  Maximal lines are drawn solid, other multi-node lines dashed,
nodes as filled circles.
"""

from __future__ import annotations

from .geometry import NodeSet, classify_lines, maximal_lines

_SIZE = 480
_MARGIN = 40


def render_svg(points: NodeSet) -> str:
    xs = [float(p.x) for p in points.nodes]
    ys = [float(p.y) for p in points.nodes]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1.0)
    scale = (_SIZE - 2 * _MARGIN) / span

    def to_px(x: float, y: float) -> tuple[float, float]:
        return (
            _MARGIN + (x - lo_x) * scale,
            _SIZE - _MARGIN - (y - lo_y) * scale,  # flip y for screen coords
        )

    maximal = set(maximal_lines(points))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    entries = classify_lines(points).entries if len(points) >= 2 else ()
    pad = span * 0.15
    for entry in entries:
        if entry.count < 3 and entry.line not in maximal:
            continue
        seg = _clip_line(entry.line, lo_x - pad, hi_x + pad, lo_y - pad, hi_y + pad)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        px1, py1 = to_px(x1, y1)
        px2, py2 = to_px(x2, y2)
        if entry.line in maximal:
            style = 'stroke="#c0392b" stroke-width="2"'
        else:
            style = 'stroke="#7f8c8d" stroke-width="1" stroke-dasharray="5,4"'
        parts.append(
            f'<line x1="{px1:.2f}" y1="{py1:.2f}" x2="{px2:.2f}" y2="{py2:.2f}" {style}/>'
        )
    for p in points.nodes:
        px, py = to_px(float(p.x), float(p.y))
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="4" fill="#2c3e50"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _clip_line(line, lo_x, hi_x, lo_y, hi_y):
    """Segment of a*x + b*y + c = 0 inside the window, or None."""
    a, b, c = float(line.a), float(line.b), float(line.c)
    hits = []
    if b != 0:
        for x in (lo_x, hi_x):
            y = -(a * x + c) / b
            if lo_y - 1e-9 <= y <= hi_y + 1e-9:
                hits.append((x, y))
    if a != 0:
        for y in (lo_y, hi_y):
            x = -(b * y + c) / a
            if lo_x - 1e-9 <= x <= hi_x + 1e-9:
                hits.append((x, y))
    unique = []
    for h in hits:
        if all(abs(h[0] - u[0]) + abs(h[1] - u[1]) > 1e-9 for u in unique):
            unique.append(h)
    if len(unique) < 2:
        return None
    return unique[0], unique[1]
