"""Kernel backend selection.

The enumeration kernels are written as plain functions over numpy arrays
and compiled with numba's ``@njit`` when it is available.  Setting the
environment variable ``ROTSYS_NO_NUMBA=1`` (or any value other than ``0``)
skips the JIT and runs the identical source in pure Python, which changes
nothing but speed.  See benchmarks/bench_kernels.py for the comparison.
"""

import os


def _want_numba() -> bool:
    return os.environ.get("ROTSYS_NO_NUMBA", "0") in ("", "0")


NUMBA_ENABLED = False
if _want_numba():
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    from numba import njit
else:

    def njit(*args, **kwargs):
        """No-op stand-in for numba.njit."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap
