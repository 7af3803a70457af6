"""Kernel backend selection.

Set QDIVISIBLE_KERNEL=c to require the compiled backend (ImportError if it
is not built), =py to force the pure-Python one; anything else (or unset)
prefers compiled and falls back to Python.
"""

import os

from . import _kernels_py as _py

try:
    from . import _kernels_c as _c
except ImportError:
    _c = None

_mode = os.environ.get("QDIVISIBLE_KERNEL", "auto").lower()
if _mode == "c":
    if _c is None:
        raise ImportError("QDIVISIBLE_KERNEL=c but the compiled kernel is not built")
    _impl = _c
elif _mode == "py":
    _impl = _py
else:
    _impl = _c if _c is not None else _py


def backend_name() -> str:
    return "py" if _impl is _py else "c"


def incidence_histogram(q, v, n, k, gens, add, mul):
    return _impl.incidence_histogram(q, v, n, k, gens, add, mul)


def triple_dim_histogram(q, v, n, k, gens, add, mul, neg, inv):
    return _impl.triple_dim_histogram(q, v, n, k, gens, add, mul, neg, inv)
