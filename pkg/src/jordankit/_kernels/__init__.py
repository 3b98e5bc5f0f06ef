"""Kernel backend selection.

The compiled extension is used when it imported cleanly; set
JORDANKIT_PURE_KERNELS=1 to force the pure-Python fallback (the parity
tests and the benchmark do this explicitly).
"""

import os

from . import pure
from .pure import madd, msub, mneg, mscale, meye, mtranspose, pivot_columns

if os.environ.get("JORDANKIT_PURE_KERNELS"):
    _impl = pure
else:
    try:
        from . import fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
matmul = _impl.matmul
matvec = _impl.matvec
gauss_solve = _impl.gauss_solve
gauss_rank = _impl.gauss_rank
