"""Kernel selection: the compiled extension when it was built, else Python.

Set ``HYPERFIELD_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_compiled = None

if not os.environ.get("HYPERFIELD_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled

        BACKEND = "cython"
    except ImportError:
        _compiled = None


def _pick(n):
    if _compiled is not None and n <= _compiled.MAX_N:
        return _compiled
    return _kernels_py


def set_add(add, n, a, b):
    return _pick(n).set_add(add, n, a, b)


def assoc_failures(add, n, limit=-1):
    return _pick(n).assoc_failures(add, n, limit)


def is_hyperfield(add, mul, n, neg_one):
    return _pick(n).is_hyperfield(add, mul, n, neg_one)
