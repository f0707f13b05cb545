"""Reducing curves on the standard genus-2 splitting surface of the 3-sphere.

Combinatorial curve words on the fixed six-curve hexagon complex, the action
of the Goeritz generators, disk-bounding tests in both handlebodies, the
reduction of any reducing curve to the standard one with a generator-word
certificate, and a breadth-first atlas of realized intersection triples.
"""

from .curve import (
    CurveWord,
    Counts,
    CurveSignature,
    P_CURVE,
    PUSHOFFS,
    arc_census,
    canonical_form,
    counts,
    from_doc,
    from_normal_coordinates,
    is_separating,
    normalize,
    signature,
    to_doc,
    validate,
)
from .action import apply_generator, apply_twist, apply_word, parse_goeritz_word
from .atlas import AtlasStore, enumerate_atlas, lambda_triples
from .handlebody import (
    arc_pi1_words,
    bounds_disk,
    check_word_constraints,
    is_reducing,
    theta_word,
)
from .reduction import (
    ReductionCertificate,
    classify,
    express_from_standard,
    is_standard,
    reduce_to_standard,
)
from .surface import SurfaceComplex, build_complex, complex_symmetry

__version__ = "0.1.0"

__all__ = [
    "AtlasStore", "Counts", "CurveSignature", "CurveWord", "P_CURVE", "PUSHOFFS",
    "ReductionCertificate", "SurfaceComplex", "apply_generator", "apply_twist",
    "apply_word", "arc_census", "arc_pi1_words", "bounds_disk", "build_complex",
    "canonical_form", "check_word_constraints", "classify", "complex_symmetry",
    "counts", "enumerate_atlas", "express_from_standard", "from_doc",
    "from_normal_coordinates", "is_reducing", "is_separating", "is_standard",
    "lambda_triples", "normalize", "parse_goeritz_word", "reduce_to_standard",
    "signature", "to_doc", "validate",
]
