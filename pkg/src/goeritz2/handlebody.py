"""Curve words in the handlebody fundamental groups and disk-bounding tests.

The inner handlebody V is a neighborhood of a theta graph whose three edges are
dual to the disks bounded by X, Y, Z; the outer handlebody W plays the same
role with A, B, C.  A curve's crossing sequence with either disk triple is an
edge path in the corresponding theta graph, and the curve bounds a disk on that
side iff the path backtracks to nothing (adjacent equal letters cancel,
cyclically).

pi_1(V) is free on b, c where b is the core loop dual to the Z-disk and c the
core loop dual to the Y-disk.  Reading rule for a traversal: crossing Z
front-to-back contributes b (back-to-front b^-1), crossing Y front-to-back
contributes c^-1 (back-to-front c), crossing X contributes nothing (the
basepoint disk).  This calibration makes the B-pushoff read "b", the C-pushoff
read "c", and reproduces the catalogued words of curve arcs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import (
    Arc,
    CurveWord,
    Counts,
    _cyclic_cancel_equal,
    _theta_letters,
    arc_census,
    counts,
    ensure_normal,
    is_separating,
    normalize,
    split_arcs,
)
from .errors import (
    ConstraintViolation,
    EmptyAfterNormalization,
    MalformedInput,
    NotReducing,
)
from .surface import EDGE_CURVE, EDGE_INDEX, EDGE_TOKENS, HEX_BALL

# ------------------------------------------------------------- free words

Letter = tuple[str, int]  # ("b"|"c", +1|-1)


def _reduce_word(letters: list[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def _cyclic_reduce(word: tuple[Letter, ...]) -> tuple[Letter, ...]:
    word = _reduce_word(list(word))
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    return word


def word_str(word: tuple[Letter, ...]) -> str:
    if not word:
        return "1"
    return ".".join(g if s > 0 else f"{g}^-1" for g, s in word)


def _letter_for_crossing(e: int, h: int) -> Letter | None:
    curve = EDGE_CURVE[e]
    to_back = HEX_BALL[h] == 2
    if curve == 5:  # Z
        return ("b", 1 if to_back else -1)
    if curve == 4:  # Y
        return ("c", -1 if to_back else 1)
    return None  # X or an A/B/C crossing


# ------------------------------------------------------------- theta words


def theta_word(w: CurveWord, side: str) -> tuple[str, ...]:
    """Cyclic projection of the crossing sequence to one disk system (V or W)."""
    if side not in ("V", "W"):
        raise MalformedInput(f"side must be 'V' or 'W', got {side!r}")
    w = ensure_normal(w)
    return tuple(_theta_letters(w.steps, side))


def bounds_disk(w: CurveWord, side: str) -> bool:
    """True iff the theta word cancels to nothing, i.e. the curve bounds a disk."""
    return not _cyclic_cancel_equal(list(theta_word(w, side)))


def reducing_reason(w: CurveWord) -> str | None:
    """None if w is a reducing curve, else a reason code."""
    try:
        w = ensure_normal(w)
    except EmptyAfterNormalization:
        return "empty"
    if not is_separating(w):
        return "nonseparating"
    if not bounds_disk(w, "V"):
        return "no-disk-V"
    if not bounds_disk(w, "W"):
        return "no-disk-W"
    return None


def is_reducing(w: CurveWord) -> bool:
    return reducing_reason(w) is None


def require_reducing(w: CurveWord) -> CurveWord:
    reason = reducing_reason(w)
    if reason is not None:
        raise NotReducing(reason)
    return ensure_normal(w)


# --------------------------------------------------------------- arc words


def arc_word(arc: Arc) -> tuple[Letter, ...]:
    letters = []
    for e, h in zip(arc.inner_edges, arc.inner_hexes):
        letter = _letter_for_crossing(e, h)
        if letter is not None:
            letters.append(letter)
    return _reduce_word(letters)


def curve_v_word(w: CurveWord) -> tuple[Letter, ...]:
    """The whole curve read in pi_1(V), cyclically reduced."""
    w = ensure_normal(w)
    letters = []
    for e, h in w.steps:
        letter = _letter_for_crossing(e, h)
        if letter is not None:
            letters.append(letter)
    return _cyclic_reduce(tuple(letters))


@dataclass(frozen=True)
class ArcWordEntry:
    index: int
    pants: int
    type: str
    start_edge: str   # refined token, e.g. "A1"
    end_edge: str
    word: tuple[Letter, ...]

    def word_text(self) -> str:
        return word_str(self.word)


@dataclass(frozen=True)
class ArcWordReport:
    entries: tuple[ArcWordEntry, ...]
    closed_loop: bool  # True when the curve never crosses A, B or C

    def concatenation(self) -> tuple[Letter, ...]:
        letters: list[Letter] = []
        for entry in self.entries:
            letters.extend(entry.word)
        return _cyclic_reduce(_reduce_word(letters))

    def join_cancellations(self) -> list[int]:
        """Indices i where word(rho_i) ends with the inverse of word(rho_i+1)'s start."""
        bad = []
        n = len(self.entries)
        for i in range(n):
            wi = self.entries[i].word
            wj = self.entries[(i + 1) % n].word
            if wi and wj and wi[-1][0] == wj[0][0] and wi[-1][1] == -wj[0][1]:
                bad.append(i)
        return bad

    def as_doc(self) -> dict:
        return {
            "format": "goeritz-arc-words/1",
            "closed_loop": self.closed_loop,
            "arcs": [
                {
                    "index": e.index,
                    "pants": e.pants,
                    "type": e.type,
                    "start": e.start_edge,
                    "end": e.end_edge,
                    "word": e.word_text(),
                }
                for e in self.entries
            ],
            "concatenation": word_str(self.concatenation()),
        }

    def as_table(self) -> str:
        bad = set(self.join_cancellations())
        lines = ["idx  pants  type  start  end    join      word"]
        for e in self.entries:
            join = "cancels!" if e.index in bad else "reduced"
            lines.append(
                f"{e.index:<4} {e.pants:<6} {e.type:<5} {e.start_edge:<6} "
                f"{e.end_edge:<6} {join:<9} {e.word_text()}")
        lines.append(f"concatenation: {word_str(self.concatenation())}")
        return "\n".join(lines)


def arc_pi1_words(w: CurveWord) -> ArcWordReport:
    w = ensure_normal(w)
    arcs = split_arcs(w)
    if not arcs:
        full = curve_v_word(w)
        entry = ArcWordEntry(0, 0, "--", "--", "--", full)
        return ArcWordReport((entry,), closed_loop=True)
    entries = tuple(
        ArcWordEntry(
            i, arc.pants, arc.type,
            EDGE_TOKENS[arc.start_edge], EDGE_TOKENS[arc.end_edge], arc_word(arc))
        for i, arc in enumerate(arcs)
    )
    return ArcWordReport(entries, closed_loop=False)


# -------------------------------------------------- word-form constraints


def _is_power_of(word: tuple[Letter, ...], gen: str) -> bool:
    return all(g == gen for g, _ in word)


def _matches_ab_form(word: tuple[Letter, ...], start_index: int) -> bool:
    """Arc from A to B: word b^k, with an optional single c-letter prefix
    (c^-1 when starting on A1, c when starting on A2)."""
    if _is_power_of(word, "b"):
        return True
    head, tail = word[0], word[1:]
    want = ("c", -1) if start_index == 1 else ("c", 1)
    return head == want and _is_power_of(tail, "b")


def _matches_ac_form(word: tuple[Letter, ...], start_index: int) -> bool:
    if _is_power_of(word, "c"):
        return True
    head, tail = word[0], word[1:]
    want = ("b", 1) if start_index == 1 else ("b", -1)
    return head == want and _is_power_of(tail, "c")


@dataclass
class ConstraintReport:
    aa_lengths: list[int] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_table(self) -> str:
        lines = [f"{'check':34} result"]
        for name, passed in self.checks.items():
            lines.append(f"{name:34} {'pass' if passed else 'FAIL'}")
        for v in self.violations:
            lines.append(f"  - {v}")
        return "\n".join(lines)


def check_word_constraints(w: CurveWord, strict: bool = True) -> ConstraintReport:
    """Verify the catalogued word forms for a reducing curve with a > b + c."""
    w = require_reducing(w)
    c = counts(w)
    if not c.a > c.b + c.c:
        raise MalformedInput("word-form checks require an A-dominant curve")
    report = ConstraintReport()
    arcs = split_arcs(w)
    words = [arc_word(a) for a in arcs]

    aa_ok = True
    xing_ok = True
    form_ok = True
    for arc, word in zip(arcs, words):
        if arc.type == "AA":
            report.aa_lengths.append(len(word))
            if len(word) > 2:
                aa_ok = False
                report.violations.append(
                    f"AA arc word {word_str(word)} has length {len(word)}")
            x_crossings = sum(1 for e in arc.inner_edges if EDGE_CURVE[e] == 3)
            if x_crossings != 1:
                xing_ok = False
                report.violations.append(
                    f"AA arc crosses X {x_crossings} times")
        elif arc.type in ("AB", "AC"):
            a_end = arc.start_edge if EDGE_CURVE[arc.start_edge] == 0 else arc.end_edge
            oriented = word if EDGE_CURVE[arc.start_edge] == 0 else tuple(
                (g, -s) for g, s in reversed(word))
            idx = EDGE_INDEX[a_end]
            good = (_matches_ab_form(oriented, idx) if arc.type == "AB"
                    else _matches_ac_form(oriented, idx))
            if not good:
                form_ok = False
                report.violations.append(
                    f"{arc.type} arc word {word_str(word)} not of catalogued form")
        else:
            form_ok = False
            report.violations.append(f"unexpected arc type {arc.type} in A-dominant case")
    report.checks["aa-word-length-at-most-2"] = aa_ok
    report.checks["aa-arc-crosses-x-once"] = xing_ok
    report.checks["ab-ac-word-forms"] = form_ok

    joins = ArcWordReport(
        tuple(ArcWordEntry(i, a.pants, a.type, EDGE_TOKENS[a.start_edge],
                           EDGE_TOKENS[a.end_edge], word)
              for i, (a, word) in enumerate(zip(arcs, words))),
        closed_loop=False,
    ).join_cancellations()
    report.checks["no-trivial-relator-at-joins"] = not joins
    for i in joins:
        report.violations.append(f"trivial relator at join of arcs {i},{i + 1}")

    has_single = any(a.type == "AA" and len(word) == 1
                     for a, word in zip(arcs, words))
    two_letter_pants = {a.pants for a, word in zip(arcs, words)
                        if a.type == "AA" and len(word) == 2}
    excl = has_single or two_letter_pants != {1, 2}
    report.checks["two-letter-aa-one-side-only"] = excl
    if not excl:
        report.violations.append(
            "no single-letter AA word, yet both pants carry two-letter AA words")

    if strict and not report.ok:
        raise ConstraintViolation("; ".join(report.violations))
    return report
