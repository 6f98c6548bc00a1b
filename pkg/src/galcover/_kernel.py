"""Selects the enumeration kernel at import time.

The compiled Cython core is preferred when built; the pure-Python fallback
is always available.  Set ``GALCOVER_PURE_PYTHON=1`` to force the fallback
(used by the differential tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _enum_py

if os.environ.get("GALCOVER_PURE_PYTHON"):
    _impl = _enum_py
    KERNEL_NAME = "python (forced)"
else:
    try:
        from . import _enum_cy as _impl  # type: ignore[no-redef]

        KERNEL_NAME = "cython"
    except ImportError:
        _impl = _enum_py
        KERNEL_NAME = "python"

enumerate_tuples = _impl.enumerate_tuples
