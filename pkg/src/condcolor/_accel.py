"""Backend selection for the numeric kernels.

Set ``CONDCOLOR_DISABLE_JIT=1`` to run the pure Python/numpy versions even when
numba is installed.
"""
import os

DISABLE_ENV = "CONDCOLOR_DISABLE_JIT"

JIT_OPTIONS = {
    "nogil": True,
    "cache": True,
}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


def jit_requested() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in ("1", "true", "yes", "on")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA and jit_requested() else "numpy"


def njit(func):
    """Compile ``func`` with numba if available, else hand it back unchanged."""
    if not HAVE_NUMBA:  # pragma: no cover
        return func
    return numba.njit(**JIT_OPTIONS)(func)
