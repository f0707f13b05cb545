"""Classification of reducing curves and the reduction to the standard curve.

Every reducing curve satisfies exactly one of a > b+c, b > c+a, c > a+b.  The
reduction loop makes the curve A-dominant with delta or its inverse, then
applies whichever of the half twist or its inverse lowers a; each pass lowers
a+b+c by an even positive amount until it reaches 2, after which at most one
delta move lands on the standard curve.  The certificate records the applied
generators with a count trace and replays both ways.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .action import apply_generator, format_goeritz_word, invert_goeritz_word, parse_goeritz_word
from .curve import CurveWord, P_CURVE, arc_census, counts, signature, to_doc
from .errors import (
    BetaReductionFailure,
    IterationLimitExceeded,
    MalformedInput,
    TrichotomyViolation,
)
from .handlebody import require_reducing


def classify(w: CurveWord) -> str:
    """The unique dominance class: "A", "B" or "C"."""
    w = require_reducing(w)
    c = counts(w)
    dominant = [name for name, test in (
        ("A", c.a > c.b + c.c),
        ("B", c.b > c.c + c.a),
        ("C", c.c > c.a + c.b),
    ) if test]
    if len(dominant) != 1:
        raise TrichotomyViolation(f"counts {c.abc()} satisfy {len(dominant)} inequalities")
    if c.a == c.b + c.c or c.b == c.c + c.a or c.c == c.a + c.b:
        raise TrichotomyViolation(f"degenerate counts {c.abc()}")
    if dominant[0] == "A":
        census = arc_census(w)
        for t in ("BB", "BC", "CC"):
            if census[(t, 1)] or census[(t, 2)]:
                raise TrichotomyViolation(f"A-dominant curve carries a {t} arc")
        for t in ("AA", "AB", "AC"):
            if census[(t, 1)] != census[(t, 2)]:
                raise TrichotomyViolation(f"{t} arc counts differ between the two pants")
    return dominant[0]


def is_standard(w: CurveWord) -> str:
    """"P", "P_prime", "P_double_prime", or "none"."""
    w = require_reducing(w)
    triple = counts(w).abc()
    return {(2, 0, 0): "P", (0, 2, 0): "P_prime", (0, 0, 2): "P_double_prime"}.get(
        triple, "none")


@dataclass
class ReductionCertificate:
    """Word u with u(Q) = P, plus the per-step count trace."""

    input_counts: tuple[int, int, int]
    input_key: str = ""
    word: list[str] = field(default_factory=list)
    trace: list[tuple[int, int, int]] = field(default_factory=list)
    terminal: str = "P"

    def word_text(self) -> str:
        return format_goeritz_word(self.word)

    def as_doc(self, input_curve: CurveWord | None = None,
               output_curve: CurveWord | None = None) -> dict:
        doc = {
            "format": "goeritz-certificate/1",
            "word": self.word_text(),
            "input_counts": list(self.input_counts),
            "input_signature": self.input_key,
            "trace": [list(t) for t in self.trace],
            "terminal": self.terminal,
        }
        if input_curve is not None:
            doc["input"] = to_doc(input_curve)
        if output_curve is not None:
            doc["output"] = to_doc(output_curve)
        return doc

    @staticmethod
    def from_doc(doc: dict) -> "ReductionCertificate":
        if not isinstance(doc, dict) or doc.get("format") != "goeritz-certificate/1":
            raise MalformedInput("not a goeritz-certificate/1 document")
        cert = ReductionCertificate(tuple(doc.get("input_counts", (0, 0, 0))),
                                    input_key=doc.get("input_signature", ""))
        cert.word = parse_goeritz_word(doc.get("word", ""))
        cert.trace = [tuple(t) for t in doc.get("trace", [])]
        cert.terminal = doc.get("terminal", "P")
        return cert

    def dumps(self, **kw) -> str:
        return json.dumps(self.as_doc(**kw), indent=1) + "\n"


def reduce_to_standard(w: CurveWord, iteration_slack: int = 4) -> ReductionCertificate:
    """Transform a reducing curve into the standard one, recording the moves."""
    w = require_reducing(w)
    c = counts(w)
    cert = ReductionCertificate(c.abc(), input_key=signature(w).key())
    limit = (c.a + c.b + c.c) // 2 + iteration_slack

    def push(gen: str, new: CurveWord) -> CurveWord:
        cert.word.append(gen)
        cert.trace.append(counts(new).abc())
        return new

    iterations = 0
    while counts(w).total_abc() > 2:
        iterations += 1
        if iterations > limit:
            raise IterationLimitExceeded(f"no convergence within {limit} passes")
        before = counts(w).total_abc()
        dom = classify(w)
        if dom == "C":
            w = push("delta", apply_generator(w, "delta"))
        elif dom == "B":
            w = push("delta_inv", apply_generator(w, "delta_inv"))
        a_now = counts(w).a
        s1 = apply_generator(w, "beta")
        s2 = apply_generator(w, "beta_inv")
        a1, a2 = counts(s1).a, counts(s2).a
        if min(a1, a2) >= a_now:
            raise BetaReductionFailure(
                f"half twist did not lower a: {a_now} -> {a1}/{a2}")
        if a1 <= a2:
            w = push("beta", s1)
        else:
            w = push("beta_inv", s2)
        after = counts(w).total_abc()
        if after >= before or (before - after) % 2:
            raise IterationLimitExceeded(
                f"pass changed a+b+c from {before} to {after}")
    kind = is_standard(w)
    cert.terminal = kind
    if kind == "P_prime":
        w = push("delta_inv", apply_generator(w, "delta_inv"))
    elif kind == "P_double_prime":
        w = push("delta", apply_generator(w, "delta"))
    if counts(w).abc() != (2, 0, 0):
        raise IterationLimitExceeded("reduction did not land on the standard curve")
    return cert


def express_from_standard(cert: ReductionCertificate) -> list[str]:
    """Generator word that rebuilds the input curve from the standard one."""
    return invert_goeritz_word(cert.word)


def verify_certificate(cert: ReductionCertificate, original: CurveWord) -> bool:
    """Replay both directions and compare signatures."""
    from .action import apply_word

    p_sig = signature(P_CURVE)
    if signature(apply_word(original, cert.word)) != p_sig:
        return False
    back = apply_word(P_CURVE, express_from_standard(cert))
    return signature(back) == signature(original)
