"""Normalization kernel selection: compiled extension if available, else pure Python.

Set GOERITZ2_FORCE_PURE=1 to force the fallback (used by the benchmark and by
tests that exercise both backends).
"""

from __future__ import annotations

import os

if os.environ.get("GOERITZ2_FORCE_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND: str = _impl.BACKEND
normalize_steps = _impl.normalize_steps
canonicalize_corners = _impl.canonicalize_corners


def backends() -> dict[str, object]:
    """All importable kernel implementations, keyed by backend name."""
    from . import _kernel_py

    out: dict[str, object] = {"python": _kernel_py}
    try:
        from . import _kernel  # type: ignore[attr-defined]

        out[_kernel.BACKEND] = _kernel
    except ImportError:
        pass
    return out
