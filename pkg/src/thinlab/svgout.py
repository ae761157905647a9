"""Deterministic SVG emission: packing pictures and scan scatter plots.

All floats are fixed-format so identical inputs give byte-identical files;
the only run-dependent byte is the optional timestamp comment, which callers
can switch off.
"""
from __future__ import annotations

import time
from fractions import Fraction

from .packing import PackingOrbit


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _document(body: list[str], viewbox: tuple[float, float, float, float],
              header: str, timestamp: bool) -> str:
    x, y, w, h = viewbox
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- {header} -->",
    ]
    if timestamp:
        lines.append(f"<!-- generated {time.strftime('%Y-%m-%dT%H:%M:%S')} -->")
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x)} {_fmt(y)} '
        f'{_fmt(w)} {_fmt(h)}" width="800" height="800">'
    )
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(
    orbit: PackingOrbit,
    labels: bool = False,
    timestamp: bool = True,
    stroke_width: float | None = None,
) -> str:
    """One SVG element per orbit circle; mirrors drawn red on top.

    Labels (when asked for) carry the globally rescaled integer curvature of
    every circle whose |curvature| is at least 1.
    """
    finite = [oc for oc in orbit.circles if not oc.circle.is_line]
    xs: list[float] = []
    ys: list[float] = []
    for oc in finite:
        c = oc.circle.center
        r = oc.circle.radius
        xs.extend([c[0] - r, c[0] + r])
        ys.extend([c[1] - r, c[1] + r])
    if not xs:
        xs, ys = [-1.0, 1.0], [-1.0, 1.0]
    pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    sw = stroke_width if stroke_width is not None else max(w, h) / 400.0

    def clipped_line(circle) -> str | None:
        geom = circle.line_geometry()
        if geom is None:
            return None
        (nx, ny), off = geom
        # param form: p = off*n + t*(-ny, nx); clip t crudely to the viewbox
        span = 2.0 * max(w, h)
        px, py = off * nx, off * ny
        p1 = (px - span * (-ny), py - span * nx)
        p2 = (px + span * (-ny), py + span * nx)
        return (
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" x2="{_fmt(p2[0])}" '
            f'y2="{_fmt(p2[1])}"/>'
        )

    body = ['<g fill="none" stroke="black" stroke-width="%s">' % _fmt(sw)]
    label_elems: list[str] = []
    scaled = None
    if labels and orbit.scale is not None:
        try:
            scaled = orbit.scaled_curvatures()
        except Exception:
            scaled = None
    for i, oc in enumerate(orbit.circles):
        c = oc.circle
        if c.is_line:
            elem = clipped_line(c)
            if elem:
                body.append(elem)
            continue
        cx, cy = c.center
        r = c.radius
        body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}"/>')
        if scaled is not None:
            k = scaled[i]
            if abs(k) >= 1:
                size = max(r * 0.8, sw * 2)
                text = str(int(k)) if isinstance(k, Fraction) and k.denominator == 1 else str(k)
                label_elems.append(
                    f'<text x="{_fmt(cx)}" y="{_fmt(cy + size * 0.35)}" '
                    f'font-size="{_fmt(size)}" text-anchor="middle" '
                    f'fill="black" stroke="none">{_esc(text)}</text>'
                )
    body.append("</g>")
    body.append('<g fill="none" stroke="red" stroke-width="%s">' % _fmt(sw * 1.2))
    for oc in orbit.mirrors:
        c = oc.circle
        if c.is_line:
            elem = clipped_line(c)
            if elem:
                body.append(elem)
        else:
            cx, cy = c.center
            body.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(c.radius)}"/>'
            )
    body.append("</g>")
    body.extend(label_elems)
    header = (
        "circle packing; curvature sign convention: the bounding circle "
        "(containing the others) carries negative curvature; labels are "
        "curvatures after one global rescaling fixed by the seed circles"
    )
    return _document(body, (x0, y0, w, h), header, timestamp)


def scan_scatter_svg(rows, timestamp: bool = True) -> str:
    """Scatter of lambda_1 against p for a spectral scan."""
    pts = [(r.prime, r.lambda1) for r in rows if r.lambda1 is not None]
    width, height, margin = 640.0, 420.0, 50.0
    body: list[str] = []
    if pts:
        pmin, pmax = min(p for p, _ in pts), max(p for p, _ in pts)
        lmax = max(l for _, l in pts)
        pspan = max(pmax - pmin, 1)
        lspan = lmax if lmax > 0 else 1.0

        def sx(p: float) -> float:
            return margin + (p - pmin) / pspan * (width - 2 * margin)

        def sy(l: float) -> float:
            return height - margin - l / lspan * (height - 2 * margin)

        body.append(
            f'<g stroke="black" stroke-width="1"><line x1="{_fmt(margin)}" '
            f'y1="{_fmt(height - margin)}" x2="{_fmt(width - margin)}" '
            f'y2="{_fmt(height - margin)}"/>'
            f'<line x1="{_fmt(margin)}" y1="{_fmt(margin)}" x2="{_fmt(margin)}" '
            f'y2="{_fmt(height - margin)}"/></g>'
        )
        for p, l in pts:
            body.append(
                f'<circle cx="{_fmt(sx(p))}" cy="{_fmt(sy(l))}" r="4" fill="black"/>'
            )
            body.append(
                f'<text x="{_fmt(sx(p))}" y="{_fmt(height - margin + 16)}" '
                f'font-size="11" text-anchor="middle">{p}</text>'
            )
        body.append(
            f'<text x="{_fmt(margin - 8)}" y="{_fmt(sy(lmax) - 6)}" font-size="11" '
            f'text-anchor="end">{_fmt(lmax)}</text>'
        )
        body.append(
            f'<text x="{_fmt(width / 2)}" y="{_fmt(height - 10)}" font-size="13" '
            f'text-anchor="middle">p</text>'
        )
        body.append(
            f'<text x="14" y="{_fmt(height / 2)}" font-size="13" '
            f'text-anchor="middle" transform="rotate(-90 14 {_fmt(height / 2)})">'
            "lambda_1</text>"
        )
    return _document(
        body, (0, 0, width, height), "spectral gap scan: lambda_1 per prime", timestamp
    )
