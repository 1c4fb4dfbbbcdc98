"""Icosahedral curl eigenfields over Q(√5): exact construction and numerics."""

from .exactnum import PHI, PHI_INV, SQRT5, GoldenNumber, gn
from .trigexpr import LinearForm, TrigExpr, VectorField, conjugate, curl, divergence, taylor

__all__ = [
    "PHI",
    "PHI_INV",
    "SQRT5",
    "GoldenNumber",
    "gn",
    "LinearForm",
    "TrigExpr",
    "VectorField",
    "conjugate",
    "curl",
    "divergence",
    "taylor",
]

__version__ = "0.1.0"
