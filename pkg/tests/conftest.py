import pathlib
import random
import sys

import pytest

_SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
if _SRC.exists() and str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))

from goeritz2 import action, curve  # noqa: E402

CORPUS_SEED = 20260808
CORPUS_SIZE = 520
CORPUS_MAX_LEN = 6


@pytest.fixture(scope="session")
def standard_curve():
    return curve.normalize(curve.P_CURVE)


@pytest.fixture(scope="session")
def corpus(standard_curve):
    """(word, curve) pairs: uniformly random generator words of length <= 6."""
    rng = random.Random(CORPUS_SEED)
    out = []
    for _ in range(CORPUS_SIZE):
        word = "".join(rng.choice("abBgdD")
                       for _ in range(rng.randint(0, CORPUS_MAX_LEN)))
        out.append((word, action.apply_word(standard_curve, word)))
    return out
