"""Select the girth kernel at import time.

The compiled extension is used when it was built; setting
``CAGETS_PURE_PYTHON=1`` forces the pure-Python implementation.
"""

import os

from . import _girth_py

if os.environ.get("CAGETS_PURE_PYTHON", "").strip() not in ("", "0"):
    girth_csr = _girth_py.girth_csr
    BACKEND = "python"
else:
    try:
        from ._girth_ext import girth_csr
        BACKEND = "cython"
    except ImportError:  # extension not built
        girth_csr = _girth_py.girth_csr
        BACKEND = "python"

__all__ = ["girth_csr", "BACKEND"]
