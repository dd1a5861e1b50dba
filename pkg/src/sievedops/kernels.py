"""Kernel backend selection: compiled extension if available, else pure Python.

Set SIEVED_OPS_PURE_PYTHON=1 to force the fallback (used by the benchmark).
"""

import os

if os.environ.get("SIEVED_OPS_PURE_PYTHON") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
convolve = _impl.convolve
horner = _impl.horner
