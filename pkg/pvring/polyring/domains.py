"""
The exact-field contract for polynomial coefficients.

Coefficients are plain Python values supporting ``+ - * /``, equality and
hashing. A coefficient field object supplies the constants and the few
operations the kernel needs beyond the operators.
"""

from typing import Any

from sympy.polys.domains import QQ
from typing_extensions import Protocol

from ..basefield.field import describe_rational
from ..utils.formatting import CoefficientParts


class CoefficientField(Protocol):
    """What a polynomial ring needs from its coefficient field."""

    zero: Any
    one: Any

    def convert(self, value: Any) -> Any:
        ...

    def is_zero(self, c: Any) -> bool:
        ...

    def describe(self, c: Any) -> CoefficientParts:
        ...


class RationalNumbers:
    """QQ, backed by sympy's rational domain."""

    zero = QQ.zero
    one = QQ.one
    has_integer_content = True

    def convert(self, value: Any):
        if isinstance(value, bool):
            raise TypeError("booleans are not rationals")
        try:
            return QQ.convert(value)
        except Exception as exc:
            raise TypeError(f"cannot convert {value!r} into QQ") from exc

    __call__ = convert

    def is_zero(self, c) -> bool:
        return not c

    def describe(self, c) -> CoefficientParts:
        return describe_rational(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalNumbers)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


RATIONALS = RationalNumbers()
