"""Plain-text and SVG drawings of a path together with its marking path.

Boundaries and the demarcation path are drawn underneath."""

from __future__ import annotations

from .latpath import (
    LatticePath,
    demarcation,
    marking_path,
    parse_path,
    statistic,
)

# Higher rank wins where drawings overlap.
_STYLE = {
    "U": (1, {"e": "..", "n": ":", "d": "/"}),
    "L": (1, {"e": "..", "n": ":", "d": "/"}),
    "dem": (2, {"e": ",,", "n": ";", "d": "/"}),
    "C": (3, {"e": "--", "n": "|", "d": "/"}),
    "mar": (4, {"e": "~~", "n": "!", "d": "/"}),
}

LEGEND = "C: -- |   marking: ~~ / !   demarcation: ,, ; /   boundaries: .. :"


def _layers(C: LatticePath, L: LatticePath, U: LatticePath | None):
    layers = []
    if U is not None:
        layers.append(("U", U.word))
    layers.append(("L", L.word))
    layers.append(("dem", "".join(s for s in demarcation(C, L).word if s != "ε")))
    layers.append(("C", C.word))
    layers.append(("mar", marking_path(C, L).word))
    return layers


def render_ascii(C, L, U=None) -> str:
    """Grid drawing; numbers mark the unmarked east steps of ``C``."""
    C, L = parse_path(C), parse_path(L)
    U = parse_path(U) if U is not None else None
    width = L.d
    height = len(C) - C.d
    rows, cols = 2 * height + 2, 3 * width + 1
    canvas = [[" "] * cols for _ in range(rows)]
    rank = [[0] * cols for _ in range(rows)]

    def put(r, c, ch, k):
        if 0 <= r < rows and 0 <= c < cols and k >= rank[r][c]:
            canvas[r][c] = ch
            rank[r][c] = k

    for y in range(height + 1):
        for x in range(width + 1):
            put(2 * (height - y) + 1, 3 * x, "+", 0)

    for name, word in _layers(C, L, U):
        k, glyph = _STYLE[name]
        x = y = 0
        for s in word:
            row = 2 * (height - y) + 1
            if s == "e":
                for j, ch in enumerate(glyph["e"]):
                    put(row, 3 * x + 1 + j, ch, k)
                x += 1
            elif s == "n":
                put(row - 1, 3 * x, glyph["n"], k)
                y += 1
            elif s == "d":
                put(row - 1, 3 * x + 1, glyph["d"], k)
                put(row - 1, 3 * x + 2, glyph["d"], k)
                x += 1
                y += 1

    unmarked = statistic(C, L)
    x = y = 0
    for i, s in enumerate(C.word, 1):
        if s == "n":
            y += 1
            continue
        if i in unmarked:
            label = str(i).rjust(2)
            for j, ch in enumerate(label):
                put(2 * (height - y), 3 * x + 1 + j, ch, 9)
        x += 1

    lines = ["".join(r).rstrip() for r in canvas]
    return "\n".join(lines + ["", LEGEND])


_SVG_COLOURS = {
    "U": ('stroke="#bbb"', 2),
    "L": ('stroke="#bbb"', 2),
    "dem": ('stroke="blue" stroke-dasharray="4 3"', 2),
    "C": ('stroke="black"', 3),
    "mar": ('stroke="red"', 2),
}


def render_svg(C, L, U=None, unit: int = 30) -> str:
    C, L = parse_path(C), parse_path(L)
    U = parse_path(U) if U is not None else None
    width = L.d
    height = len(C) - C.d
    pad = unit
    W, H = width * unit + 2 * pad, height * unit + 2 * pad

    def xy(x, y):
        return f"{pad + x * unit},{pad + (height - y) * unit}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        '<g stroke="#eee" stroke-width="1">',
    ]
    for x in range(width + 1):
        parts.append(f'<line x1="{pad + x * unit}" y1="{pad}" x2="{pad + x * unit}" y2="{pad + height * unit}"/>')
    for y in range(height + 1):
        parts.append(f'<line x1="{pad}" y1="{pad + y * unit}" x2="{pad + width * unit}" y2="{pad + y * unit}"/>')
    parts.append("</g>")
    for name, word in _layers(C, L, U):
        style, sw = _SVG_COLOURS[name]
        x = y = 0
        pts = [xy(0, 0)]
        for s in word:
            x += s in "ed"
            y += s in "nd"
            pts.append(xy(x, y))
        parts.append(
            f'<polyline class="{name}" fill="none" {style} stroke-width="{sw}" points="{" ".join(pts)}"/>'
        )
    unmarked = statistic(C, L)
    x = y = 0
    for i, s in enumerate(C.word, 1):
        if s == "n":
            y += 1
            continue
        if i in unmarked:
            tx, ty = pad + (x + 0.5) * unit, pad + (height - y) * unit - 4
            parts.append(f'<text x="{tx:g}" y="{ty:g}" font-size="{unit // 2}" text-anchor="middle">{i}</text>')
        x += 1
    parts.append("</svg>")
    return "\n".join(parts)
