"""SVG drawings of instances and networks.

Geometry stays exact everywhere else; only here are coordinates turned into
decimals (6 significant digits).
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import decompose
from .grid import DirGrid
from .norm import UnitBall, as_point


@dataclass
class RenderSpec:
    width: int = 640
    height: int = 640
    margin: int = 24
    terminal_radius: float = 4.0
    terminal_fill: str = "#111111"
    network_stroke: str = "#1f5fbf"
    network_width: float = 2.0
    strip_fill: str = "#f2b134"
    staircase_fill: str = "#59a14f"
    layer_opacity: float = 0.25
    show_strips: bool = False
    show_staircases: bool = False
    direction: int = 0  # direction whose strips/staircases are shaded
    inset_ball: bool = True
    inset_size: int = 70


def fmt(v) -> str:
    return format(float(v), ".6g")


class _Viewport:
    def __init__(self, pts, spec: RenderSpec):
        xs = [float(p.x) for p in pts] or [0.0]
        ys = [float(p.y) for p in pts] or [0.0]
        self.x0, self.y1 = min(xs), max(ys)
        w = max(max(xs) - self.x0, 1e-9)
        h = max(self.y1 - min(ys), 1e-9)
        inner_w = spec.width - 2 * spec.margin
        inner_h = spec.height - 2 * spec.margin
        if len(pts) < 2 or (max(xs) == self.x0 and self.y1 == min(ys)):
            self.s = 1.0
        else:
            self.s = min(inner_w / w, inner_h / h)
        self.m = spec.margin

    def __call__(self, p):
        # SVG's y axis points down
        return (self.m + (float(p.x) - self.x0) * self.s,
                self.m + (self.y1 - float(p.y)) * self.s)


def _poly(points, view, fill, opacity):
    pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in map(view, points))
    return f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity}" stroke="none"/>'


def _strip_layer(g: DirGrid, dec, view, spec):
    out = []
    for s in dec.strips:
        x0, y0, x1, y1 = s.rect
        corners = [g.vertex(x0, y0), g.vertex(x1, y0), g.vertex(x1, y1), g.vertex(x0, y1)]
        if s.degenerate or x0 == x1 or y0 == y1:
            (ax, ay), (bx, by) = view(corners[0]), view(corners[2])
            out.append(f'<line x1="{fmt(ax)}" y1="{fmt(ay)}" x2="{fmt(bx)}" y2="{fmt(by)}" '
                       f'stroke="{spec.strip_fill}" stroke-width="6" stroke-opacity="{spec.layer_opacity}"/>')
        else:
            out.append(_poly(corners, view, spec.strip_fill, spec.layer_opacity))
    return out


def _staircase_layer(g: DirGrid, dec, view, spec):
    out = []
    for st in dec.staircases:
        ox, oy = st.origin
        for t in st.terms:
            tx, ty = g.cells[t]
            corners = [g.vertex(ox, oy), g.vertex(tx, oy), g.vertex(tx, ty), g.vertex(ox, ty)]
            out.append(_poly(corners, view, spec.staircase_fill, spec.layer_opacity))
    return out


def _inset(ball: UnitBall, spec: RenderSpec):
    r = spec.inset_size / 2
    cx = cy = 4 + r
    scale = r / max(max(abs(float(v.x)), abs(float(v.y))) for v in ball.vertices)
    pts = " ".join(f"{fmt(cx + float(v.x) * scale)},{fmt(cy - float(v.y) * scale)}"
                   for v in ball.vertices)
    rays = "".join(
        f'<line x1="{fmt(cx)}" y1="{fmt(cy)}" x2="{fmt(cx + float(v.x) * scale)}" '
        f'y2="{fmt(cy - float(v.y) * scale)}" stroke="#777" stroke-width="0.6"/>'
        for v in ball.vertices)
    return (f'<g class="ball"><polygon points="{pts}" fill="none" stroke="#333" '
            f'stroke-width="1"/>{rays}</g>')


def render_svg(ball: UnitBall, terminals, net=None, spec: RenderSpec | None = None) -> str:
    """Terminals as disks, network segments as strokes, optional shaded layers."""
    spec = spec or RenderSpec()
    ts = list(dict.fromkeys(as_point(t) for t in terminals))
    segs = net.merged_segments() if net is not None else []
    pts = ts + [p for a, b, _ in segs for p in (a, b)]
    view = _Viewport(pts, spec)
    body = []
    if (spec.show_strips or spec.show_staircases) and len(ts) > 1:
        g = DirGrid(ball, ts, spec.direction % ball.m)
        dec = decompose(g)
        if spec.show_strips:
            body.append('<g class="strips">' + "".join(_strip_layer(g, dec, view, spec)) + "</g>")
        if spec.show_staircases:
            body.append('<g class="staircases">' + "".join(_staircase_layer(g, dec, view, spec))
                        + "</g>")
    lines = []
    for a, b, _ in segs:
        (ax, ay), (bx, by) = view(a), view(b)
        lines.append(f'<line x1="{fmt(ax)}" y1="{fmt(ay)}" x2="{fmt(bx)}" y2="{fmt(by)}"/>')
    body.append(f'<g class="network" stroke="{spec.network_stroke}" '
                f'stroke-width="{spec.network_width}" stroke-linecap="round">'
                + "".join(lines) + "</g>")
    disks = []
    for t in ts:
        x, y = view(t)
        disks.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(spec.terminal_radius)}"/>')
    body.append(f'<g class="terminals" fill="{spec.terminal_fill}">' + "".join(disks) + "</g>")
    if spec.inset_ball:
        body.append(_inset(ball, spec))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
            f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">'
            '<rect width="100%" height="100%" fill="white"/>'
            + "".join(body) + "</svg>\n")
