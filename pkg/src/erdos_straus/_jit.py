"""Optional numba acceleration.

Set ``ERDOS_STRAUS_DISABLE_NUMBA=1`` to force the pure-numpy kernels
(useful for debugging and for the kernel benchmark).
"""
import os

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("ERDOS_STRAUS_DISABLE_NUMBA", "") not in ("1", "true", "yes")


def optional_njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise return the function untouched."""

    def decorator(func):
        if HAVE_NUMBA:
            return njit(*args, **kwargs)(func)
        return func

    return decorator
