"""Exact symbolic computation for the Witt algebra acting on the loop
Diamond algebra: structure constants, PBW computation, operator-algebra
homomorphisms, concrete module families, and replayable certificates for
their simplicity, rank and isomorphism properties.  All arithmetic is
exact over the rationals.
"""

from .exceptions import (
    AlgebraError,
    AlgebraMismatch,
    InvalidGenerator,
    InvalidSpec,
    NotAModule,
    NotApplicable,
    NotWeight,
    RequiresSimple,
    UnsupportedOperation,
    UnsupportedVariable,
    VariableMismatch,
    ZeroVector,
)
from .scalars import Scalar, format_scalar, scalar

__all__ = [
    "AlgebraError",
    "AlgebraMismatch",
    "InvalidGenerator",
    "InvalidSpec",
    "NotAModule",
    "NotApplicable",
    "NotWeight",
    "RequiresSimple",
    "Scalar",
    "UnsupportedOperation",
    "UnsupportedVariable",
    "VariableMismatch",
    "ZeroVector",
    "format_scalar",
    "scalar",
]

__version__ = "0.1.0"
