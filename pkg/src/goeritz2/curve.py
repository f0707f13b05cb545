"""Simple closed curves on the six-curve complex as cyclic crossing words.

A curve transverse to the system is the cyclic sequence of its edge crossings;
each step records the edge crossed and the hexagon entered.  The in-hexagon
arcs are then chords between sides, and a curve is embeddable iff its chords
can be drawn disjointly.  Minimal position is reached by removing spurs and
generalized bigons (kernel), after which the word is re-embedded canonically
from its normal coordinates and corner passes are slid to a fixed side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernel
from .errors import (
    EmptyAfterNormalization,
    InconsistentCoordinates,
    InternalInvariantError,
    MalformedInput,
    MalformedWord,
    NotEmbeddable,
    ParityViolation,
)
from .surface import (
    CORNER_AFTER,
    CURVE_NAMES,
    EDGE_CURVE,
    EDGE_ENDPOINTS,
    EDGE_HEXES,
    EDGE_OF_TOKEN,
    EDGE_TOKENS,
    HEX_OF_TOKEN,
    HEX_PANTS,
    HEX_SIDES,
    HEX_TOKENS,
    OTHER_HEX,
    SIDE_POS,
    VERTEX_TOKENS,
    fan_key_from,
)

Step = tuple[int, int]  # (edge id, hexagon entered)

CURVE_FORMAT = "goeritz-curve/1"


def _slot_origin(e: int) -> int:
    """Vertex from which crossings along an edge are counted (lower token name)."""
    u, v = EDGE_ENDPOINTS[e]
    return u if VERTEX_TOKENS[u] <= VERTEX_TOKENS[v] else v


# ------------------------------------------------------------------ the word


class CurveWord:
    """A closed curve as a cyclic list of (edge, hexagon-entered) steps."""

    __slots__ = ("steps", "normalized")

    def __init__(self, steps: tuple[Step, ...], normalized: bool = False):
        self.steps = steps
        self.normalized = normalized

    def __len__(self) -> int:
        return len(self.steps)

    def __eq__(self, other) -> bool:
        return isinstance(other, CurveWord) and canonical_steps(self) == canonical_steps(other)

    def __hash__(self) -> int:
        return hash(canonical_steps(self))

    def __repr__(self) -> str:
        body = " ".join(f"{EDGE_TOKENS[e]}>{HEX_TOKENS[h]}" for e, h in self.steps)
        return f"CurveWord[{body}]"

    def tokens(self) -> list[list[str]]:
        return [[EDGE_TOKENS[e], HEX_TOKENS[h]] for e, h in self.steps]

    @staticmethod
    def from_tokens(pairs) -> "CurveWord":
        steps = []
        for pair in pairs:
            try:
                et, ht = pair
                steps.append((EDGE_OF_TOKEN[et], HEX_OF_TOKEN[ht]))
            except (KeyError, ValueError, TypeError):
                raise MalformedInput(f"bad step token {pair!r}") from None
        return validate(steps)


def _check_chain(steps: list[Step]) -> None:
    n = len(steps)
    if n == 0:
        raise MalformedWord("empty step list")
    for i in range(n):
        e, h = steps[i]
        if h not in EDGE_HEXES[e]:
            raise MalformedWord(
                f"step {i}: {HEX_TOKENS[h]} is not adjacent to {EDGE_TOKENS[e]}")
        e2, h2 = steps[(i + 1) % n]
        if SIDE_POS[h][e2] < 0:
            raise MalformedWord(
                f"step {i}: next edge {EDGE_TOKENS[e2]} is not a side of {HEX_TOKENS[h]}")
        if h2 != OTHER_HEX[e2][h]:
            raise MalformedWord(
                f"step {i + 1}: expected hexagon {HEX_TOKENS[OTHER_HEX[e2][h]]}")


def _check_parity(steps: list[Step]) -> None:
    abc = sum(1 for e, _ in steps if EDGE_CURVE[e] < 3)
    xyz = len(steps) - abc
    if abc % 2 or xyz % 2:
        raise ParityViolation(f"crossing parities: ABC={abc}, XYZ={xyz}")


def _arcs(steps: tuple[Step, ...] | list[Step]):
    """(hexagon, entry edge, exit edge) for each in-hexagon arc."""
    n = len(steps)
    return [(steps[i][1], steps[i][0], steps[(i + 1) % n][0]) for i in range(n)]


def _interleave(h: int, pair1: tuple[int, int], pair2: tuple[int, int]) -> bool:
    p1, q1 = (SIDE_POS[h][x] for x in pair1)
    p2, q2 = (SIDE_POS[h][x] for x in pair2)
    if len({p1, q1, p2, q2}) < 4:
        return False
    inside = {(p1 + k) % 6 for k in range(1, (q1 - p1) % 6)}
    return (p2 in inside) != (q2 in inside)


def _check_embeddable(steps: list[Step]) -> None:
    # per-hexagon chord classes must be pairwise non-interleaving (spur chords exempt)
    classes: dict[int, set[tuple[int, int]]] = {h: set() for h in range(4)}
    for h, e1, e2 in _arcs(steps):
        if e1 != e2:
            classes[h].add((min(e1, e2), max(e1, e2)))
    for h, cs in classes.items():
        cl = sorted(cs)
        for i in range(len(cl)):
            for j in range(i + 1, len(cl)):
                if _interleave(h, cl[i], cl[j]):
                    raise NotEmbeddable(
                        f"chords {tuple(EDGE_TOKENS[x] for x in cl[i])} and "
                        f"{tuple(EDGE_TOKENS[x] for x in cl[j])} interleave in {HEX_TOKENS[h]}")
    # per-edge order consistency (checked on the spur-free core of the word)
    es = [e for e, _ in steps]
    hs = [h for _, h in steps]
    from . import _kernel_py

    _kernel_py._remove_spurs(es, hs)
    core = list(zip(es, hs))
    if not core:
        return
    n = len(core)
    keyed: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        e, h = core[i]
        hp, hq = EDGE_HEXES[e]
        # chord on the entered side lives in h, chord behind lives in the other hexagon
        h_from = OTHER_HEX[e][h]
        e_next = core[(i + 1) % n][0]
        e_prev = core[(i - 1) % n][0]
        side_chord = {h: e_next, h_from: e_prev}
        origin = _slot_origin(e)
        klo = fan_key_from(hp, e, side_chord[hp], origin)
        khi = fan_key_from(hq, e, side_chord[hq], origin)
        keyed.setdefault(e, []).append((klo, khi))
    for e, ks in keyed.items():
        ks.sort()
        for (a1, b1), (a2, b2) in zip(ks, ks[1:]):
            if b2 < b1:
                raise NotEmbeddable(
                    f"crossing order along {EDGE_TOKENS[e]} is not realizable")


def validate(steps) -> CurveWord:
    """Check the chain, parity and embeddability conditions."""
    steps = [(int(e), int(h)) for e, h in steps]
    _check_chain(steps)
    _check_parity(steps)
    _check_embeddable(steps)
    return CurveWord(tuple(steps))


# ------------------------------------------------------------- coordinates


def to_coordinates(w: CurveWord) -> dict[tuple[int, int, int], int]:
    """Chord-class counts {(hexagon, lo edge, hi edge): n}.  Word must be spur-free."""
    out: dict[tuple[int, int, int], int] = {}
    for h, e1, e2 in _arcs(w.steps):
        if e1 == e2:
            raise InternalInvariantError("coordinates of a word with spurs")
        key = (h, min(e1, e2), max(e1, e2))
        out[key] = out.get(key, 0) + 1
    return out


def _coords_check(coords: dict[tuple[int, int, int], int]) -> None:
    for (h, e1, e2), c in coords.items():
        if c < 0 or e1 == e2 or SIDE_POS[h][e1] < 0 or SIDE_POS[h][e2] < 0:
            raise InconsistentCoordinates(f"bad chord class ({h},{e1},{e2})")
    for h in range(4):
        cl = sorted({(e1, e2) for (hh, e1, e2), c in coords.items() if hh == h and c > 0})
        for i in range(len(cl)):
            for j in range(i + 1, len(cl)):
                if _interleave(h, cl[i], cl[j]):
                    raise NotEmbeddable(
                        f"interleaving chord classes in {HEX_TOKENS[h]}")
    for e in range(12):
        hp, hq = EDGE_HEXES[e]
        totals = []
        for h in (hp, hq):
            totals.append(sum(c for (hh, e1, e2), c in coords.items()
                              if hh == h and c > 0 and e in (e1, e2)))
        if totals[0] != totals[1]:
            raise InconsistentCoordinates(
                f"edge {EDGE_TOKENS[e]} endpoint counts differ: {totals}")


def _slot_fill(coords, e: int, h: int) -> list[tuple[int, int]]:
    """(slot range start, class partner edge) blocks along edge e as seen from h."""
    origin = _slot_origin(e)
    items = []
    for (hh, e1, e2), c in coords.items():
        if hh != h or c <= 0 or e not in (e1, e2):
            continue
        other = e2 if e1 == e else e1
        items.append((fan_key_from(h, e, other, origin), other, c))
    items.sort()
    blocks = []
    pos = 0
    for _, other, c in items:
        blocks.append((pos, other, c))
        pos += c
    return blocks


def _hex_matches(coords) -> dict[int, dict[tuple[int, int], tuple[int, int]]]:
    """For each hexagon, the pairing (edge, slot) -> (edge, slot) given by its chords."""
    slots_of: dict[tuple[int, int, int], list[int]] = {}
    for e in range(12):
        for h in EDGE_HEXES[e]:
            for start, other, c in _slot_fill(coords, e, h):
                slots_of[(h, e, other)] = list(range(start, start + c))
    match: dict[int, dict[tuple[int, int], tuple[int, int]]] = {h: {} for h in range(4)}
    for (h, e1, e2), c in coords.items():
        if c <= 0:
            continue
        side1 = _boundary_ordered(h, e1, slots_of[(h, e1, e2)])
        side2 = _boundary_ordered(h, e2, slots_of[(h, e2, e1)])
        for k in range(c):
            a = (e1, side1[k])
            b = (e2, side2[c - 1 - k])
            match[h][a] = b
            match[h][b] = a
    return match


def _boundary_ordered(h: int, e: int, slots: list[int]) -> list[int]:
    """Slots of edge e listed in the direction the stored boundary of h walks side e."""
    p = SIDE_POS[h][e]
    start_vertex = CORNER_AFTER[(p - 1) % 6]
    ascending = _slot_origin(e) == start_vertex
    return sorted(slots) if ascending else sorted(slots, reverse=True)


def from_normal_coordinates(coords) -> list[CurveWord]:
    """All components of the unique normal multicurve with these chord counts."""
    coords = {k: int(v) for k, v in coords.items() if v}
    _coords_check(coords)
    if not coords:
        return []
    match = _hex_matches(coords)
    # connection walk over crossing slots
    seen: set[tuple[int, int]] = set()
    components: list[CurveWord] = []
    all_crossings = sorted(
        {key for h in range(4) for key in match[h].keys()})
    for start in all_crossings:
        if start in seen:
            continue
        e, s = start
        dest = EDGE_HEXES[e][1]
        start_state = (e, s, dest)
        steps: list[Step] = []
        state = start_state
        while True:
            e, s, dest = state
            seen.add((e, s))
            steps.append((e, dest))
            e2, s2 = match[dest][(e, s)]
            state = (e2, s2, OTHER_HEX[e2][dest])
            if state == start_state:
                break
        components.append(CurveWord(tuple(steps), normalized=False))
    return components


# ------------------------------------------------------------- normalization


def reversed_steps(steps: tuple[Step, ...]) -> tuple[Step, ...]:
    """The same curve traversed backwards."""
    n = len(steps)
    return tuple((steps[n - 1 - i][0], OTHER_HEX[steps[n - 1 - i][0]][steps[n - 1 - i][1]])
                 for i in range(n))


def _least_rotation(seq: tuple[Step, ...]) -> tuple[Step, ...]:
    """Booth's algorithm: lexicographically minimal rotation in linear time."""
    n = len(seq)
    if n <= 1:
        return seq
    doubled = seq + seq
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = f[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return doubled[k:k + n]


def canonical_steps(w: CurveWord) -> tuple[Step, ...]:
    """Rotation-minimal form of the step list (traversal orientation preserved)."""
    return _least_rotation(w.steps)


def canonical_unoriented(w: CurveWord) -> tuple[Step, ...]:
    """Rotation- and reversal-minimal form."""
    return min(_least_rotation(w.steps), _least_rotation(reversed_steps(w.steps)))


def _theta_letters(steps, system: str) -> list[str]:
    lo, hi = (3, 6) if system == "V" else (0, 3)
    return [CURVE_NAMES[EDGE_CURVE[e]] for e, _ in steps if lo <= EDGE_CURVE[e] < hi]


def _cyclic_cancel_equal(letters: list[str]) -> list[str]:
    stack: list[str] = []
    for x in letters:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    while len(stack) >= 2 and stack[0] == stack[-1]:
        stack.pop()
        stack.pop(0)
    return stack


def _cyclic_word_key(letters: list[str]) -> tuple[str, ...]:
    if not letters:
        return ()
    best = None
    for seq in (letters, letters[::-1]):
        for r in range(len(seq)):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def normalize(w: CurveWord) -> CurveWord:
    """Minimal position: spur and generalized-bigon removal, then re-embedding."""
    es = [e for e, _ in w.steps]
    hs = [h for _, h in w.steps]
    es, hs = kernel.normalize_steps(es, hs)
    if not es:
        raise EmptyAfterNormalization("curve is null-homotopic")
    return _reembed(CurveWord(tuple(zip(es, hs))))


def _is_index2_pass(steps: tuple[Step, ...], i: int) -> bool:
    """Is arc i a corner pass crossing an index-2 A/B/C edge?"""
    e1, h = steps[i]
    e2 = steps[(i + 1) % len(steps)][0]
    p1, p2 = SIDE_POS[h][e1], SIDE_POS[h][e2]
    if (p1 - p2) % 6 not in (1, 5):
        return False
    d = e1 if EDGE_CURVE[e1] < 3 else e2
    return bool(d & 1)


def _slide_pass(steps: tuple[Step, ...], i: int) -> tuple[Step, ...]:
    """Slide the corner pass at arc i across its vertex (crossing order swaps)."""
    n = len(steps)
    j = (i + 1) % n
    e1, h1 = steps[i]
    e2, h2 = steps[j]
    h_prev = OTHER_HEX[e1][h1]
    e1p, e2p = e2 ^ 1, e1 ^ 1
    h1p = OTHER_HEX[e1p][h_prev]
    h2p = OTHER_HEX[e2p][h1p]
    if h2p != h2:
        raise InternalInvariantError("corner slide broke the chain")
    out = list(steps)
    out[i] = (e1p, h1p)
    out[j] = (e2p, h2p)
    return tuple(out)


def canonical_form(w: CurveWord) -> CurveWord:
    """Minimal position with corner passes slid to the index-1 side.

    Only slides that keep the word realizable are performed (a slide shifts
    the fan position of the neighboring chords, which can collide with other
    strands); each successful slide removes one index-2 A/B/C crossing, so
    the loop terminates.  Stable across routes that differ by vertex slides;
    used by signatures, dedup and stored documents.
    """
    word = ensure_normal(w)
    steps = canonical_steps(word)
    n = len(steps)
    for _ in range(n + 8):
        # one sweep: attempt each index-2 pass once, keeping valid slides;
        # a slide rewrites two entries in place, so the sweep can continue.
        # Every pass is retried on the next sweep: a slide anywhere can change
        # the pairing families that blocked a distant pass, so narrower retry
        # policies lose route independence.
        progressed = False
        i = 0
        while i < n:
            if _is_index2_pass(steps, i):
                candidate = _slide_pass(steps, i)
                try:
                    _reembed(CurveWord(candidate))
                except (InternalInvariantError, NotEmbeddable):
                    pass
                else:
                    steps = candidate
                    progressed = True
                    i += 2
                    continue
            i += 1
        if not progressed:
            return _reembed(CurveWord(canonical_steps(CurveWord(steps))))
    raise InternalInvariantError("canonicalization failed to stabilize")


def _reembed(word: CurveWord) -> CurveWord:
    """Canonical embedded realization of a minimal word; verifies class invariants.

    The trace direction is arbitrary, so match it to the input's orientation.
    """
    comps = from_normal_coordinates(to_coordinates(word))
    if len(comps) != 1:
        raise InternalInvariantError(
            f"minimal word re-embedded into {len(comps)} components")
    traced = comps[0]
    if len(traced) != len(word):
        raise InternalInvariantError("re-embedding changed the word length")
    fwd = canonical_steps(traced)
    rev = _least_rotation(reversed_steps(traced.steps))
    want = canonical_steps(word)
    if fwd == want:
        return CurveWord(fwd, normalized=True)
    if rev == want:
        return CurveWord(rev, normalized=True)
    raise InternalInvariantError("re-embedding changed the cyclic word")


def ensure_normal(w: CurveWord) -> CurveWord:
    return w if w.normalized else normalize(w)


# ------------------------------------------------------------------- queries


@dataclass(frozen=True)
class Counts:
    a: int
    b: int
    c: int
    x: int
    y: int
    z: int

    def abc(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def total_abc(self) -> int:
        return self.a + self.b + self.c

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.x, self.y, self.z)


def counts(w: CurveWord) -> Counts:
    w = ensure_normal(w)
    tally = [0] * 6
    for e, _ in w.steps:
        tally[EDGE_CURVE[e]] += 1
    return Counts(*tally)


def is_separating(w: CurveWord) -> bool:
    """Mod-2 homology test against the symplectic pairs (B,Z) and (C,Y)."""
    c = counts(w)
    return c.b % 2 == 0 and c.c % 2 == 0 and c.y % 2 == 0 and c.z % 2 == 0


ARC_TYPES = ("AA", "AB", "AC", "BB", "BC", "CC")
_FORBIDDEN_PAIRS = (("AA", "BB"), ("AA", "BC"), ("AA", "CC"),
                    ("AB", "CC"), ("AC", "BB"), ("BB", "CC"))


@dataclass(frozen=True)
class Arc:
    """A component arc of the curve on one pair of pants."""

    pants: int                   # 1 or 2
    start_edge: int              # A/B/C edge crossed at the start
    end_edge: int                # A/B/C edge crossed at the end
    inner_edges: tuple[int, ...]  # X/Y/Z crossings, in order
    inner_hexes: tuple[int, ...]  # hexagons entered at those crossings

    @property
    def type(self) -> str:
        t = sorted(CURVE_NAMES[EDGE_CURVE[e]] for e in (self.start_edge, self.end_edge))
        return "".join(t)


def split_arcs(w: CurveWord) -> list[Arc]:
    """Cut the cyclic word at its A/B/C crossings, in traversal order."""
    w = ensure_normal(w)
    steps = w.steps
    n = len(steps)
    marks = [i for i in range(n) if EDGE_CURVE[steps[i][0]] < 3]
    if not marks:
        return []
    arcs = []
    for k, i in enumerate(marks):
        j = marks[(k + 1) % len(marks)]
        inner_e, inner_h = [], []
        pants = HEX_PANTS[steps[i][1]]
        t = (i + 1) % n
        while t != j:
            e, h = steps[t]
            if HEX_PANTS[h] != pants:
                raise InternalInvariantError("arc crosses a pants boundary silently")
            inner_e.append(e)
            inner_h.append(h)
            t = (t + 1) % n
        arcs.append(Arc(pants, steps[i][0], steps[j][0], tuple(inner_e), tuple(inner_h)))
    return arcs


def arc_census(w: CurveWord) -> dict[tuple[str, int], int]:
    """Counts |DE|_i of arc types per pair of pants."""
    census = {(t, i): 0 for t in ARC_TYPES for i in (1, 2)}
    for arc in split_arcs(w):
        census[(arc.type, arc.pants)] += 1
    for t1, t2 in _FORBIDDEN_PAIRS:
        for i in (1, 2):
            if census[(t1, i)] and census[(t2, i)]:
                raise NotEmbeddable(
                    f"incompatible arc types {t1},{t2} coexist on pants {i}")
    return census


@dataclass(frozen=True)
class CurveSignature:
    """Computable invariant bundle used as the working equality test."""

    counts: tuple[int, ...]
    census: tuple[int, ...]
    disk_v: bool
    disk_w: bool
    refined: tuple[tuple[tuple[str, str], ...], tuple[tuple[str, str], ...]]

    def triple(self) -> tuple[int, int, int]:
        return self.counts[:3]

    def key(self) -> str:
        return json.dumps(
            [self.counts, self.census, self.disk_v, self.disk_w,
             [list(map(list, r)) for r in self.refined]],
            separators=(",", ":"))


_SIGNATURE_CACHE: dict[tuple[Step, ...], CurveSignature] = {}


def signature(w: CurveWord) -> CurveSignature:
    cached = _SIGNATURE_CACHE.get(w.steps)
    if cached is not None:
        return cached
    key_steps = w.steps
    w = canonical_form(w)
    sig = _signature_of_canonical(w)
    if len(_SIGNATURE_CACHE) > 200_000:
        _SIGNATURE_CACHE.clear()
    _SIGNATURE_CACHE[key_steps] = sig
    _SIGNATURE_CACHE[w.steps] = sig
    return sig


def _signature_of_canonical(w: CurveWord) -> CurveSignature:
    c = counts(w)
    census = arc_census(w)
    refined: tuple[list, list] = ([], [])
    for arc in split_arcs(w):
        pair = tuple(sorted((EDGE_TOKENS[arc.start_edge], EDGE_TOKENS[arc.end_edge])))
        refined[arc.pants - 1].append(pair)
    dv = not _cyclic_cancel_equal(_theta_letters(w.steps, "V"))
    dw = not _cyclic_cancel_equal(_theta_letters(w.steps, "W"))
    return CurveSignature(
        counts=c.as_tuple(),
        census=tuple(census[(t, i)] for t in ARC_TYPES for i in (1, 2)),
        disk_v=dv,
        disk_w=dw,
        refined=(tuple(sorted(refined[0])), tuple(sorted(refined[1]))),
    )


# ------------------------------------------------------------- serialization


def to_doc(w: CurveWord) -> dict:
    w = ensure_normal(w)
    return {"format": CURVE_FORMAT, "representation": "steps", "steps": w.tokens()}


def coordinates_doc(w: CurveWord) -> dict:
    w = ensure_normal(w)
    coords = to_coordinates(w)
    nested: dict[str, dict[str, int]] = {}
    for (h, e1, e2), c in sorted(coords.items()):
        nested.setdefault(HEX_TOKENS[h], {})[f"{EDGE_TOKENS[e1]}-{EDGE_TOKENS[e2]}"] = c
    return {"format": CURVE_FORMAT, "representation": "normal", "coordinates": nested}


def from_doc(doc: dict) -> CurveWord:
    if not isinstance(doc, dict) or doc.get("format") != CURVE_FORMAT:
        raise MalformedInput(f"not a {CURVE_FORMAT} document")
    rep = doc.get("representation")
    if rep == "steps":
        return CurveWord.from_tokens(doc.get("steps", []))
    if rep == "normal":
        coords = {}
        for ht, chords in (doc.get("coordinates") or {}).items():
            if ht not in HEX_OF_TOKEN:
                raise MalformedInput(f"unknown hexagon {ht!r}")
            for pair, c in chords.items():
                try:
                    t1, t2 = pair.split("-")
                    e1, e2 = EDGE_OF_TOKEN[t1], EDGE_OF_TOKEN[t2]
                except (ValueError, KeyError):
                    raise MalformedInput(f"bad side pair {pair!r}") from None
                coords[(HEX_OF_TOKEN[ht], min(e1, e2), max(e1, e2))] = int(c)
        comps = from_normal_coordinates(coords)
        if len(comps) != 1:
            raise MalformedInput(
                f"normal coordinates describe {len(comps)} components, expected 1")
        return validate(list(comps[0].steps))
    raise MalformedInput(f"unknown representation {rep!r}")


def dumps(w: CurveWord) -> str:
    return json.dumps(to_doc(w), indent=1) + "\n"


def loads(text: str) -> CurveWord:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"bad curve document: {exc}") from None
    return from_doc(doc)


# ------------------------------------------------------------- stock curves

P_CURVE = CurveWord.from_tokens([["A1", "H1"], ["X1", "H2"], ["A2", "H4"], ["X2", "H3"]])

PUSHOFFS = {
    "A": CurveWord.from_tokens([["Y1", "H2"], ["Z1", "H1"]]),
    "B": CurveWord.from_tokens([["Z1", "H2"], ["X1", "H1"]]),
    "C": CurveWord.from_tokens([["Y1", "H1"], ["X1", "H2"]]),
    "X": CurveWord.from_tokens([["B1", "H3"], ["C1", "H1"]]),
    "Y": CurveWord.from_tokens([["C1", "H3"], ["A1", "H1"]]),
    "Z": CurveWord.from_tokens([["A1", "H3"], ["B1", "H1"]]),
}
