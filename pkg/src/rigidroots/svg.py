"""Deterministic SVG of the triangulated plane under a lattice segment."""

from __future__ import annotations

from fractions import Fraction

from .lattice_words import DIAGONAL, HORIZONTAL, VERTICAL, segment_crossings
from .rank2_roots import as_vector, is_primitive_positive
from .errors import UsageError

_STROKE = {HORIZONTAL: "#1f77b4", DIAGONAL: "#2ca02c", VERTICAL: "#d62728"}


def _f(x) -> str:
    return f"{float(x):.3f}"


def render_svg(v, scale: int = 40, margin: int = 24) -> str:
    a, b = as_vector(v)
    if not is_primitive_positive((a, b)):
        raise UsageError(f"[{a},{b}] is not in P+")
    w = a * scale + 2 * margin
    h = b * scale + 2 * margin

    def px(x, y):
        return margin + Fraction(x) * scale, margin + (b - Fraction(y)) * scale

    def line(p, q, stroke, width="1", extra=""):
        (x1, y1), (x2, y2) = px(*p), px(*q)
        return (
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{stroke}" stroke-width="{width}"{extra}/>'
        )

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<title>crossing word of [{a},{b}]</title>',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        '<g id="horizontal">',
    ]
    out += [line((0, j), (a, j), _STROKE[HORIZONTAL]) for j in range(b + 1)]
    out += ["</g>", '<g id="vertical">']
    out += [line((i, 0), (i, b), _STROKE[VERTICAL]) for i in range(a + 1)]
    out += ["</g>", '<g id="diagonal">']
    for k in range(1, a + b):
        x0, x1 = max(0, k - b), min(a, k)
        out.append(line((x0, k - x0), (x1, k - x1), _STROKE[DIAGONAL]))
    out += ["</g>", '<g id="segment">', line((0, 0), (a, b), "black", "2"), "</g>"]
    out.append('<g id="crossings" font-family="monospace" font-size="12">')
    for idx, (num, den, lab) in enumerate(segment_crossings(a, b), start=1):
        t = Fraction(num, den)
        cx, cy = px(t * a, t * b)
        out.append(
            f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="3" fill="{_STROKE[lab]}" '
            f'data-index="{idx}"/>'
        )
        out.append(f'<text x="{_f(cx + 4)}" y="{_f(cy - 4)}">{lab}</text>')
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)
