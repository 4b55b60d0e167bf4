"""Deterministic ASCII and SVG pictures of diagrams and heaps.

The ASCII renderer is schematic rather than isotopic: caps hang from the
north face with nesting depth drawn as extra rows, cups mirror them on the
south face, and propagating chords run vertically with at most one
horizontal jog each.  The SVG renderer uses a fixed 40-unit node spacing
and one cubic path per chord.
"""

from __future__ import annotations

from .diagrams import NORTH, SOUTH, Diagram
from .heaps import Heap

_SPACING = 40


def _merge(canvas: list[list[str]], row: int, col: int, ch: str) -> None:
    old = canvas[row][col]
    if old == " " or old == ch:
        canvas[row][col] = ch
    else:
        canvas[row][col] = "+"


def diagram_ascii(diagram: Diagram) -> str:
    """Character-grid rendering; vertical chords are plain bars."""
    k = diagram.k
    x = lambda pos: 4 * (pos - 1)  # noqa: E731
    caps, cups, props = [], [], []
    for a, b in diagram.chords:
        if a.face == NORTH and b.face == NORTH:
            caps.append((a.pos, b.pos))
        elif a.face == SOUTH and b.face == SOUTH:
            cups.append((a.pos, b.pos))
        else:
            north = a.pos if a.face == NORTH else b.pos
            south = b.pos if b.face == SOUTH else a.pos
            props.append((north, south))

    def dips(arcs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
        # An arc dips one row lower than the arcs nested strictly inside it.
        depth: dict[tuple[int, int], int] = {}
        for arc in sorted(arcs, key=lambda ab: ab[1] - ab[0]):
            inner = [depth[o] for o in depth if arc[0] < o[0] and o[1] < arc[1]]
            depth[arc] = 1 + max(inner, default=0)
        return depth

    cap_dip = dips(caps)
    cup_dip = dips(cups)
    north_rows = max(cap_dip.values(), default=0)
    south_rows = max(cup_dip.values(), default=0)
    jogged = sorted((a, b) for a, b in props if a != b)
    mid_rows = max(1, len(jogged)) if props else 1
    height = north_rows + mid_rows + south_rows
    width = x(k) + 1
    canvas = [[" "] * width for _ in range(height)]

    for (i, j), dip in cap_dip.items():
        row = dip - 1
        canvas[row][x(i)] = "\\"
        canvas[row][x(j)] = "/"
        for col in range(x(i) + 1, x(j)):
            _merge(canvas, row, col, "_")
        for r in range(row):
            _merge(canvas, r, x(i), "|")
            _merge(canvas, r, x(j), "|")
    for (i, j), dip in cup_dip.items():
        row = north_rows + mid_rows + (south_rows - dip)
        canvas[row][x(i)] = "/"
        canvas[row][x(j)] = "\\"
        for col in range(x(i) + 1, x(j)):
            _merge(canvas, row, col, "-")
        for r in range(row + 1, height):
            _merge(canvas, r, x(i), "|")
            _merge(canvas, r, x(j), "|")
    jog_row = {pair: north_rows + t for t, pair in enumerate(jogged)}
    for a, b in props:
        if a == b:
            for r in range(height):
                _merge(canvas, r, x(a), "|")
            continue
        row = jog_row[(a, b)]
        for r in range(row):
            _merge(canvas, r, x(a), "|")
        lo, hi = sorted((x(a), x(b)))
        canvas[row][x(a)] = "+"
        canvas[row][x(b)] = "+"
        for col in range(lo + 1, hi):
            _merge(canvas, row, col, "-")
        for r in range(row + 1, height):
            _merge(canvas, r, x(b), "|")
    return "\n".join("".join(row).rstrip() for row in canvas)


def diagram_svg(diagram: Diagram) -> str:
    """SVG with one circle per node and one cubic path per chord."""
    k = diagram.k
    sp = _SPACING
    y_north, y_south = sp, 4 * sp
    width, height = sp * (k + 1), sp * 5

    def x(pos: int) -> int:
        return sp * pos

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="{sp // 2}" y="{y_north}" width="{width - sp}" '
        f'height="{y_south - y_north}" fill="none" stroke="#999"/>',
    ]
    for a, b in diagram.chords:
        if a.face == NORTH and b.face == NORTH:
            dy = min(30 * (b.pos - a.pos), 100)
            d = (
                f"M {x(a.pos)} {y_north} C {x(a.pos)} {y_north + dy}, "
                f"{x(b.pos)} {y_north + dy}, {x(b.pos)} {y_north}"
            )
        elif a.face == SOUTH and b.face == SOUTH:
            dy = min(30 * (b.pos - a.pos), 100)
            d = (
                f"M {x(a.pos)} {y_south} C {x(a.pos)} {y_south - dy}, "
                f"{x(b.pos)} {y_south - dy}, {x(b.pos)} {y_south}"
            )
        else:
            top, bot = (a, b) if a.face == NORTH else (b, a)
            mid = (y_north + y_south) // 2
            d = (
                f"M {x(top.pos)} {y_north} C {x(top.pos)} {mid}, "
                f"{x(bot.pos)} {mid}, {x(bot.pos)} {y_south}"
            )
        parts.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="2"/>')
    for pos in range(1, k + 1):
        parts.append(f'<circle cx="{x(pos)}" cy="{y_north}" r="3"/>')
        parts.append(f'<circle cx="{x(pos)}" cy="{y_south}" r="3"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def heap_svg(heap: Heap) -> str:
    """Lattice-point picture: one labelled block per entry, overlapping
    halfway between adjacent columns."""
    if not heap.columns:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"></svg>'
    unit_w, unit_h = 30, 28
    max_col = max(heap.columns)
    height = (max(heap.levels) + 1) * unit_h + unit_h
    width = (max_col + 2) * unit_w
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for c, level in sorted(zip(heap.columns, heap.levels)):
        bx = c * unit_w - unit_w // 2
        by = level * unit_h + unit_h // 2
        parts.append(
            f'<rect x="{bx}" y="{by}" width="{2 * unit_w}" height="{unit_h}" '
            f'fill="white" stroke="black"/>'
        )
        parts.append(
            f'<text x="{bx + unit_w}" y="{by + unit_h - 9}" '
            f'text-anchor="middle" font-size="13">s{c}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
