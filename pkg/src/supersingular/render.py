"""Standalone SVG drawing of a Newton polygon (840x480 view box)."""

from __future__ import annotations

from fractions import Fraction

from .poly import NewtonPolygon

WIDTH, HEIGHT = 840, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 40, 40, 60


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def polygon_svg(poly: NewtonPolygon, title: str = "") -> str:
    xs = [i for i, _ in poly.vertices]
    ys = [v for _, v in poly.vertices]
    x0, x1 = min(0, min(xs)), max(xs) or 1
    y0, y1 = min(Fraction(0), min(ys)), max(Fraction(0), max(ys))
    if y0 == y1:
        y1 = y0 + 1

    def sx(i) -> str:
        return f"{LEFT + (WIDTH - LEFT - RIGHT) * float(Fraction(i - x0) / (x1 - x0)):.2f}"

    def sy(v) -> str:
        return f"{HEIGHT - BOTTOM - (HEIGHT - TOP - BOTTOM) * float((v - y0) / (y1 - y0)):.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{sx(x0)}" y1="{sy(0)}" x2="{sx(x1)}" y2="{sy(0)}" stroke="black"/>',
        f'<line x1="{sx(0)}" y1="{sy(y0)}" x2="{sx(0)}" y2="{sy(y1)}" stroke="black"/>',
        f'<text x="{WIDTH - RIGHT}" y="{HEIGHT - 20}" text-anchor="end" font-size="14">index</text>',
        f'<text x="{LEFT - 10}" y="{TOP - 15}" font-size="14">valuation</text>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.0f}" y="{TOP - 15}" text-anchor="middle" font-size="16">{title}</text>')
    pts = " ".join(f"{sx(i)},{sy(v)}" for i, v in poly.vertices)
    out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2.5"/>')
    for i, v in poly.vertices:
        out.append(f'<circle cx="{sx(i)}" cy="{sy(v)}" r="4" fill="black"/>')
        out.append(f'<text x="{sx(i)}" y="{float(sy(v)) - 10:.2f}" text-anchor="middle" font-size="13">({i}, {_fmt(v)})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
