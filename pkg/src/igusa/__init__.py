"""Exact local zeta functions of rational functions f/g over p-adic fields.

Symbolic engine (Denef-style explicit formulas over embedded resolutions of
plane-curve pairs), together with a certified brute-force p-adic layer that
verifies the symbolic results numerically.
"""

from .poly import MultiPoly
from .zrat import ZetaRat, DenomFactor, PoleDescriptor, PoleHit, BandInvalid

__all__ = [
    "MultiPoly",
    "ZetaRat",
    "DenomFactor",
    "PoleDescriptor",
    "PoleHit",
    "BandInvalid",
]
