"""Action of the Goeritz generators and of Dehn twists on curve words.

alpha, gamma, delta and delta^-1 act by relabeling symmetries of the complex.
beta is the half twist about the central separating curve, realized as
(t_B . t_Z)^3 supported in the one-holed torus containing B and Z; its inverse
is the inverse composite.  The full twist about the separating curve is the
boundary twist of either one-holed torus and is exposed as (t_C . t_Y)^6,
which runs through the handle beta does not touch.

A twist replaces every crossing of the curve with the twisting rail by a
detour that spirals half around the rail on each side, crossing the rail's
other edge in the middle.  The spiral's sense at each crossing is tied to the
surface orientation (the sign of the crossed edge in the approach hexagon), so
all detours of one twist turn the same way and stay pairwise disjoint; "right"
names the direction with sign +1 under that rule.
"""

from __future__ import annotations

from . import curve as cm
from .curve import CurveWord, Step, canonical_unoriented, ensure_normal, normalize
from .errors import MalformedInput
from .surface import (
    CURVE_NAMES,
    EDGE_CURVE,
    EDGE_ENDPOINTS,
    OTHER_HEX,
    SIDE_POS,
    complex_symmetry,
    fence_edge,
    side_of,
    sign_in_hex,
)

GENERATORS = ("alpha", "beta", "beta_inv", "gamma", "delta", "delta_inv")

_LETTER = {"a": "alpha", "b": "beta", "B": "beta_inv",
           "g": "gamma", "d": "delta", "D": "delta_inv"}
_TO_LETTER = {v: k for k, v in _LETTER.items()}
_INVERSE = {"alpha": "alpha", "beta": "beta_inv", "beta_inv": "beta",
            "gamma": "gamma", "delta": "delta_inv", "delta_inv": "delta"}


def parse_goeritz_word(text: str) -> list[str]:
    """Compact generator string (a=alpha, b=beta, B=beta^-1, g=gamma, d=delta, D=delta^-1)."""
    try:
        return [_LETTER[ch] for ch in text]
    except KeyError as exc:
        raise MalformedInput(f"unknown generator letter {exc.args[0]!r}") from None


def format_goeritz_word(word: list[str]) -> str:
    try:
        return "".join(_TO_LETTER[g] for g in word)
    except KeyError as exc:
        raise MalformedInput(f"unknown generator {exc.args[0]!r}") from None


def invert_goeritz_word(word: list[str]) -> list[str]:
    return [_INVERSE[g] for g in reversed(word)]


# ----------------------------------------------------------------- twisting


def _cross_detour(e: int, h: int, direction: int) -> list[Step]:
    """Replacement steps for one rail crossing: spiral half around each side.

    The strand runs parallel to the rail on the approach side to the first
    vertex, crosses the rail's other edge there onto the far side, and runs
    parallel again to the second vertex, rejoining its old track.  This is the
    linear-spiral picture of the twist, so simultaneous detours at several
    crossings stay disjoint.
    """
    h_prev = OTHER_HEX[e][h]
    lam = direction * sign_in_hex(e, h_prev)
    u, v = EDGE_ENDPOINTS[e]
    first, second = (v, u) if lam > 0 else (u, v)
    curve = EDGE_CURVE[e]
    steps: list[Step] = []
    cur = h_prev
    f1 = fence_edge(first, curve, side_of(curve, h_prev))
    cur = OTHER_HEX[f1][cur]
    steps.append((f1, cur))
    partner = e ^ 1
    cur = OTHER_HEX[partner][cur]
    steps.append((partner, cur))
    f2 = fence_edge(second, curve, side_of(curve, cur))
    cur = OTHER_HEX[f2][cur]
    steps.append((f2, cur))
    if cur != h:
        raise AssertionError("twist detour did not rejoin the curve")
    return steps


def twist_system(w: CurveWord, curve_name: str, direction: int = 1) -> CurveWord:
    """Dehn twist about one of the six system curves."""
    if curve_name not in CURVE_NAMES or direction not in (1, -1):
        raise MalformedInput(f"bad twist spec ({curve_name!r}, {direction})")
    w = ensure_normal(w)
    cid = CURVE_NAMES.index(curve_name)
    out: list[Step] = []
    touched = False
    for e, h in w.steps:
        if EDGE_CURVE[e] == cid:
            out.extend(_cross_detour(e, h, direction))
            touched = True
        else:
            out.append((e, h))
    if not touched:
        return w
    return normalize(CurveWord(tuple(out)))


def twist_about_p(w: CurveWord, direction: int = 1) -> CurveWord:
    """Full twist about the standard separating curve, via the C,Y handle."""
    for _ in range(6):
        w = twist_system(w, "Y", direction)
        w = twist_system(w, "C", direction)
    return w


def apply_twist(w: CurveWord, twisting: CurveWord | str, direction: str | int = "right") -> CurveWord:
    """Twist about a system-curve pushoff or the standard separating curve.

    `twisting` may be a curve name ("A".."Z" or "P") or the pushoff CurveWord
    itself; `direction` is "right"/"left" or +1/-1.
    """
    sign = {"right": 1, "left": -1, 1: 1, -1: -1}.get(direction)
    if sign is None:
        raise MalformedInput(f"bad twist direction {direction!r}")
    if isinstance(twisting, str):
        name = twisting
    else:
        key = canonical_unoriented(ensure_normal(twisting))
        name = None
        for cand, word in cm.PUSHOFFS.items():
            if canonical_unoriented(ensure_normal(word)) == key:
                name = cand
        if canonical_unoriented(ensure_normal(cm.P_CURVE)) == key:
            name = "P"
        if name is None:
            raise MalformedInput("twisting curve is not a system pushoff or the standard curve")
    if name == "P":
        return twist_about_p(w, sign)
    if name in CURVE_NAMES:
        return twist_system(w, name, sign)
    raise MalformedInput(f"unknown twisting curve {name!r}")


# ---------------------------------------------------------------- generators


def _relabel(w: CurveWord, name: str) -> CurveWord:
    r = complex_symmetry(name)
    steps = tuple((r.apply_edge(e), r.apply_hex(h)) for e, h in w.steps)
    if w.normalized:
        # an automorphism preserves minimality; only the rotation start drifts
        return CurveWord(cm.canonical_steps(CurveWord(steps)), normalized=True)
    return normalize(CurveWord(steps))


_BETA_SEQUENCE = (("Z", 1), ("B", 1)) * 3
_BETA_INV_SEQUENCE = (("B", -1), ("Z", -1)) * 3


def apply_generator(w: CurveWord, g: str) -> CurveWord:
    w = ensure_normal(w)
    if g in ("alpha", "gamma", "delta", "delta_inv"):
        return _relabel(w, g)
    if g == "beta":
        seq = _BETA_SEQUENCE
    elif g == "beta_inv":
        seq = _BETA_INV_SEQUENCE
    else:
        raise MalformedInput(f"unknown generator {g!r}")
    for name, direction in seq:
        w = twist_system(w, name, direction)
    return w


def apply_word(w: CurveWord, word: list[str] | str) -> CurveWord:
    if isinstance(word, str):
        word = parse_goeritz_word(word)
    w = ensure_normal(w)
    for g in word:
        w = apply_generator(w, g)
    return w
