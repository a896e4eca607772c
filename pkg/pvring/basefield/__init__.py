"""Base field K = Q(v_1, ..., v_m) and the operators acting on it."""

from .field import BaseField, BaseVar, RationalFunction, rational_text
from .operators import (
    CommutationFailure,
    CommutationReport,
    DifferenceDifferentialField,
    OperatorKind,
    OperatorSpec,
    apply,
    apply_inverse,
)

__all__ = [
    "BaseField",
    "BaseVar",
    "RationalFunction",
    "rational_text",
    "OperatorKind",
    "OperatorSpec",
    "DifferenceDifferentialField",
    "CommutationFailure",
    "CommutationReport",
    "apply",
    "apply_inverse",
]
