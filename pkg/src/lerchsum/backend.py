"""Kernel backend selection.

``LERCHSUM_BACKEND=numpy|numba`` pins the implementation of the hot kernels;
unset (or ``auto``) prefers numba when it imports cleanly and falls back to
pure numpy otherwise.  Both backends satisfy identical numeric contracts;
the flag only affects speed.  ``benchmarks/bench_kernels.py`` compares them.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_requested = os.environ.get("LERCHSUM_BACKEND", "auto").strip().lower()


def _load(name: str):
    if name == "numpy":
        return _kernels_numpy, "numpy"
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba, "numba"
    if name == "auto":
        try:
            from . import _kernels_numba

            return _kernels_numba, "numba"
        except ImportError:
            return _kernels_numpy, "numpy"
    raise ValueError(
        f"LERCHSUM_BACKEND={name!r} not recognized (use 'numpy', 'numba' or 'auto')"
    )


_impl, BACKEND_NAME = _load(_requested)

series_sum = _impl.series_sum
quad_level = _impl.quad_level
