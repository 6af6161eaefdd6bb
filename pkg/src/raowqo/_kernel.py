"""Selects the realization-enumeration backend at import time.

The compiled extension is optional; set RAOWQO_PURE_PYTHON=1 to force the
pure-Python twin (used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("RAOWQO_PURE_PYTHON"):
    from raowqo import _enum_py as _impl

    BACKEND = "python"
else:
    try:
        from raowqo import _enum_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from raowqo import _enum_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

realizations = _impl.realizations
