"""Twists and the Goeritz generator action."""

import pytest

from goeritz2 import curve as cm
from goeritz2.action import (
    apply_generator,
    apply_twist,
    apply_word,
    format_goeritz_word,
    invert_goeritz_word,
    parse_goeritz_word,
    twist_about_p,
    twist_system,
)
from goeritz2.errors import MalformedInput

# hand-traced on the hexagon net: the half twist applied to the A-pushoff
ETA1_FIXTURE = cm.CurveWord.from_tokens(
    [["Y1", "H2"], ["A2", "H4"], ["X2", "H3"], ["A1", "H1"], ["Z1", "H2"], ["X1", "H1"]])

# hand-traced: single twist about Z applied to the A-pushoff
TZ_A_COUNTS = (1, 1, 0, 0, 1, 1)


def test_word_parsing():
    assert parse_goeritz_word("bDDg") == ["beta", "delta_inv", "delta_inv", "gamma"]
    assert format_goeritz_word(["beta", "delta_inv"]) == "bD"
    assert invert_goeritz_word(["beta", "delta"]) == ["delta_inv", "beta_inv"]
    with pytest.raises(MalformedInput):
        parse_goeritz_word("q")


def test_twist_fixes_own_pushoff():
    pb = cm.normalize(cm.PUSHOFFS["B"])
    assert cm.signature(twist_system(pb, "B", 1)) == cm.signature(pb)


def test_twist_fixes_disjoint_curve():
    P = cm.normalize(cm.P_CURVE)
    assert cm.signature(twist_system(P, "B", 1)) == cm.signature(P)
    assert cm.signature(twist_system(P, "Y", -1)) == cm.signature(P)


def test_twist_about_z_on_a_pushoff_matches_hand_trace():
    w = twist_system(cm.PUSHOFFS["A"], "Z", 1)
    assert cm.counts(w).as_tuple() == TZ_A_COUNTS


def test_twist_preserves_rail_count(corpus):
    for _, w in corpus[:30]:
        for name in "BZ":
            t = twist_system(w, name, 1)
            assert getattr(cm.counts(t), name.lower()) == getattr(cm.counts(w), name.lower())


def test_twist_inverse_pair(corpus):
    for _, w in corpus[:20]:
        back = twist_system(twist_system(w, "Z", 1), "Z", -1)
        assert cm.signature(back) == cm.signature(w)


def test_apply_twist_accepts_pushoff_word():
    pa = cm.PUSHOFFS["A"]
    via_name = twist_system(pa, "Z", 1)
    via_word = apply_twist(pa, cm.PUSHOFFS["Z"], "right")
    assert cm.signature(via_name) == cm.signature(via_word)


def test_apply_twist_accepts_standard_curve():
    pa = cm.PUSHOFFS["A"]
    assert cm.signature(apply_twist(pa, cm.P_CURVE, "right")) == \
        cm.signature(twist_about_p(pa, 1))


def test_apply_twist_rejects_unknown_rail():
    weird = cm.CurveWord.from_tokens(
        [["A1", "H1"], ["Z1", "H2"], ["X1", "H1"], ["Y1", "H2"],
         ["A2", "H4"], ["X2", "H3"]])
    with pytest.raises(MalformedInput):
        apply_twist(cm.P_CURVE, weird)


def test_delta_sends_standard_to_prime():
    dP = apply_generator(cm.P_CURVE, "delta")
    assert cm.counts(dP).abc() == (0, 2, 0)
    ddP = apply_generator(cm.P_CURVE, "delta_inv")
    assert cm.counts(ddP).abc() == (0, 0, 2)


def test_beta_fixes_standard_curve():
    assert cm.signature(apply_generator(cm.P_CURVE, "beta")) == cm.signature(cm.P_CURVE)
    assert cm.signature(apply_generator(cm.P_CURVE, "beta_inv")) == cm.signature(cm.P_CURVE)


def test_beta_on_a_pushoff_matches_fixture():
    eta1 = apply_generator(cm.PUSHOFFS["A"], "beta")
    assert cm.counts(eta1).as_tuple() == (2, 0, 0, 2, 1, 1)
    assert cm.signature(eta1) == cm.signature(ETA1_FIXTURE)


def test_beta_and_inverse_differ_on_a_pushoff():
    eta1 = apply_generator(cm.PUSHOFFS["A"], "beta")
    eta2 = apply_generator(cm.PUSHOFFS["A"], "beta_inv")
    assert cm.canonical_unoriented(cm.canonical_form(eta1)) != \
        cm.canonical_unoriented(cm.canonical_form(eta2))


def test_generator_word_identities(standard_curve):
    P = standard_curve
    sig = cm.signature(P)
    assert cm.signature(apply_word(P, "ddd")) == sig
    assert cm.signature(apply_word(P, "bB")) == sig
    assert cm.signature(apply_word(P, "dD")) == sig
    assert cm.signature(apply_word(P, "gg")) == sig
    assert cm.signature(apply_word(P, "aa")) == sig


def test_count_laws_on_corpus_sample(corpus):
    for word, w in corpus[:60]:
        c = cm.counts(w)
        cb = cm.counts(apply_generator(w, "beta"))
        assert (cb.b, cb.c) == (c.b, c.c), word
        cbi = cm.counts(apply_generator(w, "beta_inv"))
        assert (cbi.b, cbi.c) == (c.b, c.c), word
        cg = cm.counts(apply_generator(w, "gamma"))
        assert (cg.a, cg.b, cg.c, cg.x, cg.y, cg.z) == (c.a, c.c, c.b, c.x, c.z, c.y), word
        cd = cm.counts(apply_generator(w, "delta"))
        assert (cd.a, cd.b, cd.c, cd.x, cd.y, cd.z) == (c.c, c.a, c.b, c.z, c.x, c.y), word
        assert cm.counts(apply_generator(w, "alpha")) == c, word


def test_beta_inverse_identity_on_corpus(corpus):
    for word, w in corpus[:25]:
        assert cm.signature(apply_word(w, "bB")) == cm.signature(w), word
        assert cm.signature(apply_word(w, "Bb")) == cm.signature(w), word


def test_beta_squared_is_twist_about_standard_curve(corpus):
    for word, w in corpus[:12]:
        bb = apply_word(w, "bb")
        assert cm.signature(bb) == cm.signature(twist_about_p(w, 1)), word


def test_alpha_commutes_with_everything(corpus):
    for word, w in corpus[:10]:
        for g in ("beta", "gamma", "delta"):
            lhs = apply_generator(apply_generator(w, "alpha"), g)
            rhs = apply_generator(apply_generator(w, g), "alpha")
            assert cm.signature(lhs) == cm.signature(rhs), (word, g)


def test_unknown_generator_rejected():
    with pytest.raises(MalformedInput):
        apply_generator(cm.P_CURVE, "epsilon")
