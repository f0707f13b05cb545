"""Executable invariant battery behind `goeritz2 selftest`.

Prints one pass/fail line per check and returns a process exit code.  The full
battery mirrors the acceptance suite at reduced corpus size; `--full` raises
the corpus to the acceptance size.
"""

from __future__ import annotations

import random
import traceback

from . import atlas as atlas_mod
from . import curve as cm
from . import reduction as red
from .action import apply_generator, apply_word
from .handlebody import (
    bounds_disk,
    check_word_constraints,
    curve_v_word,
    is_reducing,
    theta_word,
    word_str,
)
from .surface import build_complex, complex_symmetry


def _corpus(n: int, max_len: int = 6, seed: int = 20260808):
    rng = random.Random(seed)
    base = cm.normalize(cm.P_CURVE)
    out = []
    for _ in range(n):
        word = "".join(rng.choice("abBgdD") for _ in range(rng.randint(0, max_len)))
        out.append((word, apply_word(base, word)))
    return out


def _checks(quick: bool):
    P = cm.normalize(cm.P_CURVE)
    n_corpus = 40 if quick else 120

    def complex_sanity():
        c = build_complex()
        assert c.euler_characteristic == -2
        assert len(c.vertices) == 6 and len(c.edges) == 12 and len(c.hexagons) == 4
        d = complex_symmetry("delta")
        assert d.compose(d).compose(d).is_identity()
        g = complex_symmetry("gamma")
        assert g.compose(g).is_identity()
        assert complex_symmetry("alpha").is_identity()

    def standard_anchors():
        assert cm.counts(P).as_tuple() == (2, 0, 0, 2, 0, 0)
        assert is_reducing(P)
        census = cm.arc_census(P)
        assert census[("AA", 1)] == census[("AA", 2)] == 1
        triples = sorted(
            cm.counts(apply_generator(P, g)).abc() for g in ("delta", "delta_inv"))
        assert triples == [(0, 0, 2), (0, 2, 0)]

    def word_calibration():
        assert word_str(curve_v_word(cm.PUSHOFFS["B"])) == "b"
        assert word_str(curve_v_word(cm.PUSHOFFS["C"])) == "c"
        assert bounds_disk(cm.PUSHOFFS["B"], "W") and not bounds_disk(cm.PUSHOFFS["B"], "V")
        assert bounds_disk(cm.PUSHOFFS["X"], "V") and not bounds_disk(cm.PUSHOFFS["X"], "W")
        assert theta_word(P, "V") == ("X", "X")

    corpus = _corpus(n_corpus)

    def count_laws():
        for word, w in corpus:
            c = cm.counts(w)
            cb = cm.counts(apply_generator(w, "beta"))
            assert (cb.b, cb.c) == (c.b, c.c), word
            cg = cm.counts(apply_generator(w, "gamma"))
            assert (cg.a, cg.b, cg.c) == (c.a, c.c, c.b), word
            cd = cm.counts(apply_generator(w, "delta"))
            assert (cd.a, cd.b, cd.c) == (c.c, c.a, c.b), word
            assert cm.counts(apply_generator(w, "alpha")) == c, word

    def dominance_trichotomy():
        for word, w in corpus:
            assert is_reducing(w), word
            red.classify(w)

    def aa_arc_constraints():
        for word, w in corpus:
            if red.classify(w) == "A" and cm.counts(w).total_abc() > 2:
                check_word_constraints(w)

    def reduction_roundtrip():
        for word, w in corpus[: max(10, n_corpus // 2)]:
            cert = red.reduce_to_standard(w)
            assert red.verify_certificate(cert, w), word

    def beta_realization():
        assert cm.signature(apply_generator(P, "beta")) == cm.signature(P)
        from .action import twist_about_p

        for word, w in corpus[:6]:
            bb = apply_generator(apply_generator(w, "beta"), "beta")
            assert cm.signature(bb) == cm.signature(twist_about_p(w)), word

    def atlas_determinism():
        s1 = atlas_mod.enumerate_atlas(2)
        s2 = atlas_mod.enumerate_atlas(2, workers=2)
        assert [r.as_json() for r in s1.records] == [r.as_json() for r in s2.records]
        for rec in s1.records:
            assert atlas_mod.is_non_triangular(rec.triple)
            assert all(t % 2 == 0 for t in rec.triple)

    return [
        ("complex-sanity", complex_sanity),
        ("standard-curve-anchors", standard_anchors),
        ("handlebody-word-calibration", word_calibration),
        ("generator-count-laws", count_laws),
        ("dominance-trichotomy", dominance_trichotomy),
        ("aa-arc-word-constraints", aa_arc_constraints),
        ("reduction-round-trip", reduction_roundtrip),
        ("half-twist-realization", beta_realization),
        ("atlas-determinism", atlas_determinism),
    ]


def run(quick: bool = True) -> int:
    failures = 0
    for name, fn in _checks(quick):
        try:
            fn()
        except Exception:
            failures += 1
            print(f"FAIL {name}")
            traceback.print_exc()
        else:
            print(f"pass {name}")
    if failures:
        print(f"{failures} check(s) failed")
        return 5
    print("all checks passed")
    return 0
