"""SVG rendering of points and generalized disks.

Presentation only: coordinates are converted to floats at a fixed
decimal precision, all correctness claims live in the exact paths.
Points become small filled circles (class "point"), disks become
stroked circles (class "disk"), and each half-plane becomes its
boundary line (class "halfplane-edge") plus a translucent polygon
shading its interior clipped to the view box (class "halfplane").
The y axis is flipped so larger y renders upward.
"""

from math import sqrt

from .geometry import Disk, HalfPlane

_PREC = 4
_STYLE = (
    "circle.point{fill:#1a1a1a;}"
    "circle.disk{fill:none;stroke:#c0392b;stroke-width:__SW__;}"
    "line.halfplane-edge{stroke:#2471a3;stroke-width:__SW__;}"
    "polygon.halfplane{fill:#2471a3;fill-opacity:0.12;stroke:none;}"
)


def _fmt(v: float) -> str:
    s = f"{v:.{_PREC}f}"
    return "0." + "0" * _PREC if s == "-" + "0." + "0" * _PREC else s


def _bounds(points, disks):
    xs, ys = [], []
    for p in points:
        xs.append(float(p.x))
        ys.append(float(p.y))
    for d in disks:
        if isinstance(d, Disk):
            r = sqrt(float(d.r2))
            xs += [float(d.center.x) - r, float(d.center.x) + r]
            ys += [float(d.center.y) - r, float(d.center.y) + r]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    pad = 0.1 * max(w, h, 1e-9)
    return x0 - pad, x1 + pad, y0 - pad, y1 + pad


def _clip_halfplane(hp: HalfPlane, box) -> list[tuple[float, float]]:
    """Vertices of {a x + b y <= c} intersected with the view rectangle."""
    x0, x1, y0, y1 = box
    poly = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    a, b, c = float(hp.a), float(hp.b), float(hp.c)
    out = []
    for i, p in enumerate(poly):
        q = poly[(i + 1) % len(poly)]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0) != (fq < 0) and fp != fq:
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _edge_segment(hp: HalfPlane, box):
    """Endpoints of the boundary line a x + b y = c clipped to the box."""
    x0, x1, y0, y1 = box
    a, b, c = float(hp.a), float(hp.b), float(hp.c)
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    return (uniq[0], uniq[1]) if len(uniq) >= 2 else None


def render_svg(points, disks) -> str:
    """SVG document showing the points and generalized disks."""
    box = _bounds(points, disks)
    x0, x1, y0, y1 = box
    w, h = x1 - x0, y1 - y0
    # flip y: world (x, y) -> svg (x, y1 + y0 - y) keeps the same box
    flip = lambda y: y1 + y0 - y
    stroke = max(w, h) / 300.0
    dot = max(w, h) / 120.0
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        "<style>" + _STYLE.replace("__SW__", _fmt(stroke)) + "</style>",
    ]
    for d in disks:
        if isinstance(d, HalfPlane):
            poly = _clip_halfplane(d, box)
            if poly:
                pts_attr = " ".join(f"{_fmt(x)},{_fmt(flip(y))}" for x, y in poly)
                parts.append(f'<polygon class="halfplane" points="{pts_attr}"/>')
            seg = _edge_segment(d, box)
            if seg:
                (ax, ay), (bx, by) = seg
                parts.append(
                    f'<line class="halfplane-edge" x1="{_fmt(ax)}" y1="{_fmt(flip(ay))}" '
                    f'x2="{_fmt(bx)}" y2="{_fmt(flip(by))}"/>'
                )
    for d in disks:
        if isinstance(d, Disk):
            r = sqrt(float(d.r2))
            parts.append(
                f'<circle class="disk" cx="{_fmt(float(d.center.x))}" '
                f'cy="{_fmt(flip(float(d.center.y)))}" r="{_fmt(r)}"/>'
            )
    for p in points:
        parts.append(
            f'<circle class="point" cx="{_fmt(float(p.x))}" '
            f'cy="{_fmt(flip(float(p.y)))}" r="{_fmt(dot)}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
