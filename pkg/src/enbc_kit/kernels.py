"""Selects the compiled echelon kernel when available.

Set ``ENBC_KIT_PURE=1`` to force the pure-Python implementation.
"""
import os

from . import _echelon_py

try:
    if os.environ.get("ENBC_KIT_PURE"):
        raise ImportError("pure Python requested")
    from . import _echelon as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def echelon_rank(rows, modulus=0):
    """Exact rank of a sparse integer matrix given as rows of (column, value) pairs.

    With ``modulus == 0`` the rank is over Q; otherwise over GF(modulus).
    """
    if _compiled is not None:
        rows = rows if isinstance(rows, list) else list(rows)
        try:
            return _compiled.echelon_rank(rows, modulus)
        except OverflowError:
            pass
    return _echelon_py.echelon_rank(rows, modulus)
