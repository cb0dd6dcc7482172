"""Optional numba acceleration for the search kernels.

Kernels are written in the subset of Python/numpy that numba compiles. With
``MODK_DISABLE_NUMBA=1`` in the environment (or numba not importable) they run
uncompiled, which is slower but gives identical results.
"""
import os

_FLAG = os.environ.get("MODK_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _FLAG in {"1", "true", "yes", "on"}

try:
    if DISABLED_BY_ENV:
        raise ImportError("numba disabled by MODK_DISABLE_NUMBA")
    import numba as _numba
except ImportError:
    _numba = None

NUMBA_ENABLED = _numba is not None


def njit(fn):
    """Compile ``fn`` with numba when enabled; always keep ``fn.py_func``."""
    if _numba is None:
        fn.py_func = fn
        return fn
    return _numba.njit(cache=True)(fn)
