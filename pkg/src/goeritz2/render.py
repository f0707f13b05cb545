"""Static SVG rendering of the four-hexagon net with a curve's chords.

Purely presentational: the four hexagons are drawn in a 2x2 grid with labeled
sides and corners, and each in-hexagon arc of the curve is a straight chord
between its two crossing points.  Crossing points are spread along each side
by their slot order, so parallel strands stay parallel in the picture.
"""

from __future__ import annotations

import math

from .curve import CurveWord, ensure_normal, counts
from .surface import (
    CORNER_AFTER,
    EDGE_HEXES,
    EDGE_TOKENS,
    HEX_SIDES,
    HEX_TOKENS,
    OTHER_HEX,
    SIDE_POS,
    VERTEX_TOKENS,
    fan_key_from,
)
from .curve import _slot_origin

_CENTERS = {0: (160.0, 160.0), 1: (480.0, 160.0), 2: (160.0, 480.0), 3: (480.0, 480.0)}
_RADIUS = 120.0


def _corner(h: int, i: int) -> tuple[float, float]:
    cx, cy = _CENTERS[h]
    ang = math.radians(-90 + 60 * i)
    return (cx + _RADIUS * math.cos(ang), cy + _RADIUS * math.sin(ang))


def _side_points(h: int, p: int) -> tuple[tuple[float, float], tuple[float, float]]:
    return _corner(h, p), _corner(h, (p + 1) % 6)


def _slot_orders(w: CurveWord) -> tuple[dict[int, int], dict[int, int]]:
    """Fan-key sorted crossing positions: (slot per step index, totals per edge)."""
    steps = w.steps
    n = len(steps)
    per_edge: dict[int, list[tuple[tuple[int, int, int], int]]] = {}
    for i in range(n):
        e, h = steps[i]
        h_from = OTHER_HEX[e][h]
        e_next = steps[(i + 1) % n][0]
        e_prev = steps[(i - 1) % n][0]
        side_chord = {h: e_next, h_from: e_prev}
        origin = _slot_origin(e)
        hp, hq = EDGE_HEXES[e]
        key = (fan_key_from(hp, e, side_chord[hp], origin),
               fan_key_from(hq, e, side_chord[hq], origin), i)
        per_edge.setdefault(e, []).append((key, i))
    slot_of_step: dict[int, int] = {}
    totals: dict[int, int] = {}
    for e, items in per_edge.items():
        items.sort()
        totals[e] = len(items)
        for k, (_, i) in enumerate(items):
            slot_of_step[i] = k
    return slot_of_step, totals


def _crossing_point(h: int, e: int, slot: int, total: int) -> tuple[float, float]:
    p = SIDE_POS[h][e]
    (x1, y1), (x2, y2) = _side_points(h, p)
    # side runs corner p -> corner p+1; corner p carries vertex CORNER_AFTER[p-1]
    start_vertex = CORNER_AFTER[(p - 1) % 6]
    t = (slot + 1) / (total + 1)
    if _slot_origin(e) != start_vertex:
        t = 1.0 - t
    return (x1 + (x2 - x1) * t, y1 + (y2 - y1) * t)


def render_svg(w: CurveWord | None = None, title: str = "") -> str:
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="640" height="660" '
             'viewBox="0 0 640 660">',
             '<style>text{font-family:monospace;font-size:11px}'
             '.edge{fill:#555}.vert{fill:#a00}.hex{fill:none;stroke:#333}'
             '.curve{stroke:#06c;stroke-width:1.6;fill:none}</style>']
    if title:
        parts.append(f'<text x="12" y="646" class="edge">{title}</text>')
    for h in range(4):
        pts = " ".join(f"{x:.1f},{y:.1f}" for x, y in (_corner(h, i) for i in range(6)))
        parts.append(f'<polygon class="hex" points="{pts}"/>')
        cx, cy = _CENTERS[h]
        parts.append(f'<text x="{cx - 12:.0f}" y="{cy + 4:.0f}" class="edge">'
                     f'{HEX_TOKENS[h]}</text>')
        for p in range(6):
            (x1, y1), (x2, y2) = _side_points(h, p)
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            ox, oy = (mx - cx) * 0.12, (my - cy) * 0.12
            parts.append(f'<text x="{mx + ox - 8:.0f}" y="{my + oy + 4:.0f}" '
                         f'class="edge">{EDGE_TOKENS[HEX_SIDES[h][p]]}</text>')
            vx, vy = _corner(h, p)
            vox, voy = (vx - cx) * 0.10, (vy - cy) * 0.10
            parts.append(f'<text x="{vx + vox - 8:.0f}" y="{vy + voy + 4:.0f}" '
                         f'class="vert">{VERTEX_TOKENS[CORNER_AFTER[(p - 1) % 6]]}</text>')
    if w is not None:
        w = ensure_normal(w)
        slots, totals = _slot_orders(w)
        steps = w.steps
        n = len(steps)
        for i in range(n):
            h = steps[i][1]
            e_in, e_out = steps[i][0], steps[(i + 1) % n][0]
            p1 = _crossing_point(h, e_in, slots[i], totals[e_in])
            p2 = _crossing_point(h, e_out, slots[(i + 1) % n], totals[e_out])
            parts.append(f'<path class="curve" d="M {p1[0]:.1f} {p1[1]:.1f} '
                         f'L {p2[0]:.1f} {p2[1]:.1f}"/>')
        c = counts(w)
        parts.append(f'<text x="12" y="628" class="edge">counts a..z = '
                     f'{c.as_tuple()}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
