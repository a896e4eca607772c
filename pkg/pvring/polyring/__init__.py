"""Multivariate polynomial arithmetic with term orders."""

from .domains import RATIONALS, CoefficientField, RationalNumbers
from .orders import Monomial, TermOrder, compare
from .poly import Poly, PolyRing, common_ring

__all__ = [
    "CoefficientField",
    "RationalNumbers",
    "RATIONALS",
    "Monomial",
    "TermOrder",
    "compare",
    "Poly",
    "PolyRing",
    "common_ring",
]
