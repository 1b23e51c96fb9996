"""Kernel selection.

The compiled Bareiss kernel is used when it was built and
``RECPRS_PURE_PYTHON`` is unset; otherwise the pure-Python twin.
"""

import os

from . import _bareiss_py

try:
    from . import _bareiss_ext
except ImportError:  # extension not built
    _bareiss_ext = None

KERNELS = {"python": _bareiss_py.det_int}
if _bareiss_ext is not None:
    KERNELS["compiled"] = _bareiss_ext.det_int

if _bareiss_ext is not None and not os.environ.get("RECPRS_PURE_PYTHON"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

det_int = KERNELS[BACKEND]
