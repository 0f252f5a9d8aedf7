"""Kernel backend selection.

Two interchangeable kernel modules exist: numba-jitted (default, fast) and
pure numpy/python.  Set ``RADIALNET_BACKEND=numpy`` to force the fallback,
``RADIALNET_BACKEND=numba`` to require the jitted path (import error if
numba is unavailable).  Unset, numba is used when importable.

Both backends produce bit-identical results; only speed differs.  See
benchmarks/bench_backends.py for a comparison.
"""

import os


def load_backend(name):
    if name == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba
    raise ValueError(f"unknown backend {name!r} (choose 'numba' or 'numpy')")


def _select():
    requested = os.environ.get("RADIALNET_BACKEND", "").strip().lower()
    if requested:
        return load_backend(requested)
    try:
        return load_backend("numba")
    except ImportError:
        return load_backend("numpy")


kernels = _select()
BACKEND = kernels.NAME
