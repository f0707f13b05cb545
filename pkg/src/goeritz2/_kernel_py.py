"""Pure-Python normalization kernel.

Hot loop of the package: removes spurs (an arc entering and leaving a hexagon
through the same side) and generalized bigons (a subpath crossing a curve,
running parallel to it through corner and side-skirting chords, and recrossing
it), then slides corner passes so the A/B/C edge of every pass has index 1.

The compiled extension (goeritz2._kernel) implements the same three entry
points; `goeritz2.kernel` picks whichever is importable.

All functions take and return flat lists of (edge, hexagon) int pairs encoded
as two parallel lists.  Moves are free-homotopy moves: no strand-nesting checks
are made here.  Callers re-embed canonically afterwards.
"""

from __future__ import annotations

BACKEND = "python"

# Static tables (mirrors of goeritz2.surface; duplicated so the compiled kernel
# can carry the same constants without importing Python modules).
_EDGE_CURVE = (0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5)
_HEX_SIDES = (
    (0, 10, 2, 6, 4, 8),
    (1, 10, 3, 6, 5, 8),
    (0, 11, 2, 7, 4, 9),
    (1, 11, 3, 7, 5, 9),
)
_SIDE_POS = tuple(
    tuple({e: p for p, e in enumerate(sides)}.get(e, -1) for e in range(12))
    for sides in _HEX_SIDES
)
_EDGE_HEXES = tuple(
    tuple(h for h in range(4) if _SIDE_POS[h][e] >= 0) for e in range(12)
)
_OTHER_HEX = tuple(
    tuple(
        (_EDGE_HEXES[e][0] if h == _EDGE_HEXES[e][1] else _EDGE_HEXES[e][1])
        if h in _EDGE_HEXES[e] else -1
        for h in range(4)
    )
    for e in range(12)
)
_HEX_CURVE_SIDE = tuple(
    tuple(next(e for e in sides if _EDGE_CURVE[e] == c) for c in range(6))
    for sides in _HEX_SIDES
)
_NEIGHBORS = tuple(
    tuple(
        (sides[(_SIDE_POS[h][e] - 1) % 6], sides[(_SIDE_POS[h][e] + 1) % 6])
        if _SIDE_POS[h][e] >= 0 else (-1, -1)
        for e in range(12)
    )
    for h, sides in enumerate(_HEX_SIDES)
)


def _remove_spurs(es: list[int], hs: list[int]) -> bool:
    """Remove one round of spur pairs; True if anything changed."""
    changed = False
    while True:
        n = len(es)
        if n < 2:
            return changed
        hit = -1
        for i in range(n):
            if es[i] == es[(i + 1) % n]:
                hit = i
                break
        if hit < 0:
            return changed
        changed = True
        j = (hit + 1) % n
        for k in sorted((hit, j), reverse=True):
            del es[k]
            del hs[k]


def _find_run(es: list[int], hs: list[int]) -> tuple[int, list[int], int] | None:
    """Find a bigon run: (start index, fence indices, end index), or None."""
    n = len(es)
    for i in range(n):
        d = es[i]
        curve = _EDGE_CURVE[d]
        cur = hs[i]
        fences: list[int] = []
        k = i
        while True:
            nk = (k + 1) % n
            if nk == i:
                break
            f = es[nk]
            dside = _HEX_CURVE_SIDE[cur][curve]
            if not fences:
                # first chord leaves the crossed edge itself
                nb = _NEIGHBORS[cur][dside]
                if f == nb[0] or f == nb[1]:
                    fences.append(nk)
                    cur = hs[nk]
                    k = nk
                    continue
                break
            if f == dside:
                return i, fences, nk
            g = es[k]
            nb = _NEIGHBORS[cur][dside]
            other_fence = nb[0] if nb[1] == g else nb[1] if nb[0] == g else -1
            if f == other_fence:
                fences.append(nk)
                cur = hs[nk]
                k = nk
                continue
            break
    return None


def _slide_run(es: list[int], hs: list[int], i: int, fences: list[int], end: int) -> None:
    """Replace the run with the mirrored fence path on the far side of the curve."""
    n = len(es)
    order = [i] + fences + [end]
    h_before = _OTHER_HEX[es[i]][hs[i]]
    new_steps = []
    cur = h_before
    for idx in fences:
        fp = es[idx] ^ 1
        nxt = _OTHER_HEX[fp][cur]
        new_steps.append((fp, nxt))
        cur = nxt
    # rebuild: walk the old word from end+1 around to i-1, then append new steps
    out_e: list[int] = []
    out_h: list[int] = []
    k = (end + 1) % n
    while k != i:
        out_e.append(es[k])
        out_h.append(hs[k])
        k = (k + 1) % n
    for e, h in new_steps:
        out_e.append(e)
        out_h.append(h)
    es[:] = out_e
    hs[:] = out_h


def normalize_steps(es: list[int], hs: list[int]) -> tuple[list[int], list[int]]:
    """Spur and bigon removal to a fixed point.  May return empty lists."""
    es = list(es)
    hs = list(hs)
    while True:
        _remove_spurs(es, hs)
        if not es:
            return es, hs
        run = _find_run(es, hs)
        if run is None:
            return es, hs
        _slide_run(es, hs, *run)


def canonicalize_corners(es: list[int], hs: list[int]) -> tuple[list[int], list[int]]:
    """Unguarded corner-pass rewrite: A/B/C edge of each pass forced to index 1.

    A corner pass is a pair of consecutive crossings whose connecting arc is a
    corner chord (adjacent sides).  Sliding it across the vertex toggles both
    edge indices; the count of index-2 A/B/C crossings strictly decreases, so
    this terminates.  Input must be spur- and bigon-free.  The production
    canonical form (curve.canonical_form) uses a realizability-guarded variant
    of this rewrite; this entry point remains for backend differential tests.
    """
    es = list(es)
    hs = list(hs)
    while True:
        n = len(es)
        hit = -1
        for i in range(n):
            j = (i + 1) % n
            e1, e2 = es[i], es[j]
            h = hs[i]
            p1, p2 = _SIDE_POS[h][e1], _SIDE_POS[h][e2]
            if (p1 - p2) % 6 not in (1, 5):
                continue
            d = e1 if _EDGE_CURVE[e1] < 3 else e2
            if d & 1:  # index-2 A/B/C edge: slide
                hit = i
                break
        if hit < 0:
            return es, hs
        i = hit
        j = (i + 1) % n
        h_prev = _OTHER_HEX[es[i]][hs[i]]
        # crossing order swaps across the vertex: (e1, e2) -> (partner e2, partner e1)
        e1p, e2p = es[j] ^ 1, es[i] ^ 1
        h1p = _OTHER_HEX[e1p][h_prev]
        h2p = _OTHER_HEX[e2p][h1p] if h1p >= 0 else -1
        if h1p < 0 or h2p < 0 or h2p != hs[j]:
            raise AssertionError("corner slide broke the chain")
        es[i], hs[i] = e1p, h1p
        es[j], hs[j] = e2p, h2p
