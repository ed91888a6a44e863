"""Kernel selection: compiled extension when available, pure Python otherwise.

Set UNITWREATH_PURE=1 to force the Python kernel (used by the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("UNITWREATH_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPL = _impl.IMPL
Convolver = _impl.Convolver
