"""Dominance classification and the reduction algorithm."""

import pytest

from goeritz2 import curve as cm
from goeritz2 import reduction as red
from goeritz2.action import apply_generator, apply_word
from goeritz2.curve import arc_census, counts, signature
from goeritz2.errors import NotReducing


def test_classify_standard_curves():
    assert red.classify(cm.P_CURVE) == "A"
    assert red.classify(apply_generator(cm.P_CURVE, "delta")) == "B"
    assert red.classify(apply_generator(cm.P_CURVE, "delta_inv")) == "C"


def test_classify_rejects_nonreducing():
    with pytest.raises(NotReducing):
        red.classify(cm.PUSHOFFS["A"])


def test_trichotomy_and_degeneracy(corpus):
    for word, w in corpus:
        c = counts(w)
        holds = [c.a > c.b + c.c, c.b > c.c + c.a, c.c > c.a + c.b]
        assert sum(holds) == 1, (word, c.abc())
        assert c.a != c.b + c.c and c.b != c.c + c.a and c.c != c.a + c.b, word


def test_a_dominance_iff_aa_arcs(corpus):
    for word, w in corpus[:150]:
        c = counts(w)
        census = arc_census(w)
        a_dom = c.a > c.b + c.c
        has_aa = census[("AA", 1)] >= 1 and census[("AA", 2)] >= 1
        assert a_dom == has_aa, word


def test_equal_bc_forces_standard(corpus):
    # among A-dominant curves, b == c only for the standard one
    for word, w in corpus[:200]:
        c = counts(w)
        if c.a > c.b + c.c and c.b == c.c:
            assert (c.a, c.b, c.c) == (2, 0, 0), word


def test_is_standard():
    assert red.is_standard(cm.P_CURVE) == "P"
    assert red.is_standard(apply_generator(cm.P_CURVE, "delta")) == "P_prime"
    assert red.is_standard(apply_generator(cm.P_CURVE, "delta_inv")) == "P_double_prime"
    big = apply_word(cm.P_CURVE, "db")
    assert red.is_standard(big) == "none"


def test_reduce_standard_is_empty():
    cert = red.reduce_to_standard(cm.P_CURVE)
    assert cert.word == [] and cert.terminal == "P"


def test_reduce_prime_applies_delta_inv():
    cert = red.reduce_to_standard(apply_generator(cm.P_CURVE, "delta"))
    assert cert.word == ["delta_inv"]
    assert cert.word_text() == "D"
    assert red.express_from_standard(cert) == ["delta"]


def test_reduce_double_prime_applies_delta():
    cert = red.reduce_to_standard(apply_generator(cm.P_CURVE, "delta_inv"))
    assert cert.word == ["delta"]


def test_certificate_roundtrip_small():
    w = apply_word(cm.P_CURVE, "dbD")
    cert = red.reduce_to_standard(w)
    assert red.verify_certificate(cert, w)
    assert signature(apply_word(cm.P_CURVE, red.express_from_standard(cert))) == \
        signature(w)


def test_reduction_roundtrip_corpus(corpus):
    for word, w in corpus[:120]:
        cert = red.reduce_to_standard(w)
        limit = counts(w).total_abc() // 2 + 4
        # while-loop passes append two generators each (at most), final fix one
        assert len(cert.word) <= 2 * limit + 1, word
        assert red.verify_certificate(cert, w), word


def test_trace_strictly_decreasing(corpus):
    for word, w in corpus[:80]:
        cert = red.reduce_to_standard(w)
        total = sum(cert.input_counts)
        for gen, triple in zip(cert.word, cert.trace):
            new = sum(triple)
            if gen in ("beta", "beta_inv"):
                assert new < total and (total - new) % 2 == 0, word
            else:
                assert new == total, word
            total = new
        assert total == 2, word


def test_certificate_serialization():
    w = apply_word(cm.P_CURVE, "dB")
    cert = red.reduce_to_standard(w)
    doc = cert.as_doc(input_curve=w)
    restored = red.ReductionCertificate.from_doc(doc)
    assert restored.word == cert.word
    assert restored.trace == cert.trace
    assert restored.terminal == cert.terminal
