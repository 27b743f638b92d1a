"""Selects the histogram engine: compiled extension when built, else Python.

Set RECTCHAR_PURE_PYTHON=1 in the environment to force the fallback; the
benchmark script under benchmarks/ times the two implementations against
each other.
"""

from __future__ import annotations

import os

__all__ = ["factorization_histogram", "BACKEND"]

if os.environ.get("RECTCHAR_PURE_PYTHON"):
    from ._pykernel import factorization_histogram
    BACKEND = "python"
else:
    try:
        from ._cykernel import factorization_histogram  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        from ._pykernel import factorization_histogram  # type: ignore[no-redef]
        BACKEND = "python"
