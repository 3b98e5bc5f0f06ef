"""Verified computational kernel for Jordan pairs over matrix algebras,
their projective completions, and the associated symmetric spaces.

Everything runs over a tower of scalar rings (exact rationals, odd prime
fields, float64, and nested dual-number extensions), so algebraic
identities are certified exactly and derivatives are computed by scalar
extension rather than by limits.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .algebra import Involution, LinearOperator, Matrix
from .graded import GroupElement
from .jordan import JordanContext
from .projline import Polarity, ProjectivePoint
from .rings import (FLOAT64, RATIONAL, Dual, DualRing, Fp, Float64Ring,
                    PrimeFieldRing, RationalRing)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND", "Involution", "LinearOperator", "Matrix",
    "GroupElement", "JordanContext", "Polarity", "ProjectivePoint",
    "FLOAT64", "RATIONAL", "Dual", "DualRing", "Fp", "Float64Ring",
    "PrimeFieldRing", "RationalRing", "__version__",
]
