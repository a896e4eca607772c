"""Order-filtered jet rings with the operator actions of a linear system."""

from .ideal import JetIdeal, ring_numerator
from .operators import d_apply, delta_apply, embed, restrict, sigma_apply, total_derivative
from .ring import FilteredElement, JetRing, JetVar, jet_key, jet_ring, leibniz_det

__all__ = [
    "JetVar",
    "JetRing",
    "jet_ring",
    "jet_key",
    "leibniz_det",
    "FilteredElement",
    "JetIdeal",
    "ring_numerator",
    "d_apply",
    "sigma_apply",
    "delta_apply",
    "embed",
    "restrict",
    "total_derivative",
]
