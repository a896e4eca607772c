"""
Utility functions for pvring.
"""

from .expressions import ExpressionParser, tokenize
from .records import format_records, parse_records

__all__ = [
    "ExpressionParser",
    "tokenize",
    "format_records",
    "parse_records",
]
