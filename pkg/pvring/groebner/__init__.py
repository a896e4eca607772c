"""Groebner bases and the ideal queries built on them."""

from .basis import GroebnerBasis, IdealPresentation, normal_form
from .buchberger import buchberger
from .ideals import (
    combination,
    eliminate,
    groebner,
    ideals_equal,
    is_trivial,
    lift,
    member,
    radical_member,
    saturate,
)

__all__ = [
    "IdealPresentation",
    "GroebnerBasis",
    "normal_form",
    "buchberger",
    "groebner",
    "member",
    "is_trivial",
    "ideals_equal",
    "eliminate",
    "saturate",
    "radical_member",
    "lift",
    "combination",
]
