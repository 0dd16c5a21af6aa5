"""Select the numerical kernel backend at import time.

The compiled extension (`viscoexchange._kernels`, Cython) is preferred;
the pure-numpy module (`viscoexchange._kernels_py`) is the fallback. Set
``VISCOEXCHANGE_BACKEND=python`` to force the fallback, or ``=cython`` to
require the extension (ImportError if it is not built).
"""

from __future__ import annotations

import os

_requested = os.environ.get("VISCOEXCHANGE_BACKEND", "auto").lower()

if _requested == "python":
    from viscoexchange import _kernels_py as kernels
elif _requested == "cython":
    from viscoexchange import _kernels as kernels  # type: ignore[no-redef]
else:
    try:
        from viscoexchange import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from viscoexchange import _kernels_py as kernels


def active_backend() -> str:
    """Name of the kernel backend in use: 'cython' or 'python'."""
    return kernels.BACKEND_NAME
