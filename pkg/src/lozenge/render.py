"""SVG and ASCII renderers for tilings and type simplices."""

from __future__ import annotations

from math import sqrt

from .cuttypes import simplex_projection, valid_types
from .lattice import PeriodicityMatrix
from .tiling import Tiling

SQRT3 = sqrt(3.0)

LETTER_FILL = {"U": "#4e79a7", "V": "#f28e2b", "W": "#59a14f"}
POSITIVE_FILL = "#e15759"
BOUNDARY_FILL = "#bab0ac"

# Lozenge corners in (u, v) offsets from the carrying cell, in perimeter order.
QUADS = {
    "U": ((0, 0), (0, -1), (1, 0), (1, 1)),
    "V": ((0, 0), (1, 0), (0, -1), (-1, -1)),
    "W": ((0, 0), (1, 0), (1, -1), (0, -1)),
}


def _screen(x1: float, x2: float, scale: float) -> tuple[float, float]:
    # u maps to (1, 0) and v to (-1/2, -sqrt(3)/2) in output units.
    return ((x1 - x2 / 2) * scale, -x2 * SQRT3 / 2 * scale)


def render_svg(tiling: Tiling, scale: float = 40.0) -> str:
    """Draw one fundamental domain plus a one-cell faded periodic border."""
    m = tiling.matrix
    polygons = []
    xs: list[float] = []
    ys: list[float] = []
    for x1 in range(-1, m.a1 + 1):
        for x2 in range(-1, m.b2 + 1):
            inside = 0 <= x1 < m.a1 and 0 <= x2 < m.b2
            letter = tiling.letter_at((x1, x2))
            points = []
            for du, dv in QUADS[letter]:
                px, py = _screen(x1 + du, x2 + dv, scale)
                xs.append(px)
                ys.append(py)
                points.append(f"{px:.2f},{py:.2f}")
            polygons.append(
                f'<polygon points="{" ".join(points)}" fill="{LETTER_FILL[letter]}" '
                f'fill-opacity="{"1.0" if inside else "0.45"}" '
                f'stroke="#333333" stroke-width="{scale * 0.03:.2f}"/>'
            )
    pad = scale / 2
    minx, miny = min(xs) - pad, min(ys) - pad
    width, height = max(xs) + pad - minx, max(ys) + pad - miny
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{minx:.2f} {miny:.2f} {width:.2f} {height:.2f}">'
    )
    return "\n".join([header, *polygons, "</svg>"]) + "\n"


def render_ascii(tiling: Tiling) -> str:
    """Emit the letter grid of the fundamental domain, top row = largest x2."""
    m = tiling.matrix
    q = tiling.quotient
    rows = []
    for x2 in reversed(range(m.b2)):
        rows.append("".join(tiling.letters[q.lookup[(x1, x2)]] for x1 in range(m.a1)))
    return "\n".join(rows) + "\n"


def render_simplex_svg(matrix: PeriodicityMatrix, scale: float = 30.0) -> str:
    """Draw the triangle of letter-count triples with the valid ones marked."""
    n = matrix.n
    corner_points = []
    xs: list[float] = []
    ys: list[float] = []
    for corner in ((n, 0, 0), (0, n, 0), (0, 0, n)):
        px, py = simplex_projection(corner)
        px, py = px * scale, -py * scale
        xs.append(px)
        ys.append(py)
        corner_points.append(f"{px:.2f},{py:.2f}")
    circles = []
    for t in valid_types(matrix, include_boundary=True):
        px, py = simplex_projection(t)
        px, py = px * scale, -py * scale
        fill = POSITIVE_FILL if t.positive else BOUNDARY_FILL
        circles.append(
            f'<circle cx="{px:.2f}" cy="{py:.2f}" r="{scale * 0.18:.2f}" '
            f'fill="{fill}"><title>{t}</title></circle>'
        )
    pad = scale
    minx, miny = min(xs) - pad, min(ys) - pad
    width, height = max(xs) + pad - minx, max(ys) + pad - miny
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{minx:.2f} {miny:.2f} {width:.2f} {height:.2f}">'
    )
    triangle = (
        f'<polygon points="{" ".join(corner_points)}" fill="none" '
        f'stroke="#333333" stroke-width="{scale * 0.05:.2f}"/>'
    )
    return "\n".join([header, triangle, *circles, "</svg>"]) + "\n"
