"""The difference-differential linear system and its checks."""

from .fundamental import verify_fundamental_matrix
from .matrix import Matrix, parse_matrix, split_entries
from .system import IntegrabilityCheck, IntegrabilityReport, LinearSystem

__all__ = [
    "Matrix",
    "parse_matrix",
    "split_entries",
    "LinearSystem",
    "IntegrabilityCheck",
    "IntegrabilityReport",
    "verify_fundamental_matrix",
]
