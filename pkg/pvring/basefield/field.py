"""
Exact arithmetic in the base field K = Q(v_1, ..., v_m).

Numerators and denominators are sympy polynomials over QQ in a ring with the
graded reverse lexicographic order on the declared variable list. Every
RationalFunction is kept in canonical form:

    - gcd(numerator, denominator) is a unit,
    - the denominator has integer coefficients with content 1,
    - the leading coefficient of the denominator (grevlex) is positive.

Canonical forms are unique, so equality and hashing compare the stored
polynomials directly.
"""

import re
from typing import Dict, Iterable, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing as SympyPolyRing

from ..exceptions import FieldPresentationError, RingMismatchError
from ..utils.expressions import ExpressionParser
from ..utils.formatting import CoefficientParts, format_terms

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_RESERVED = {"X", "det"}


def rational_text(c) -> str:
    """Render a QQ element as ``n`` or ``n/d``."""
    n = int(QQ.numer(c))
    d = int(QQ.denom(c))
    return str(n) if d == 1 else f"{n}/{d}"


def describe_rational(c) -> CoefficientParts:
    """Split a QQ element for :func:`format_terms`."""
    negative = c < 0
    magnitude = -c if negative else c
    return negative, rational_text(magnitude), magnitude == QQ.one


class BaseVar:
    """A generator of K: its name and its fixed position in the variable list."""

    __slots__ = ("name", "index")

    def __init__(self, name: str, index: int):
        self.name = name
        self.index = index

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseVar) and (self.name, self.index) == (other.name, other.index)

    def __hash__(self) -> int:
        return hash((self.name, self.index))

    def __repr__(self) -> str:
        return f"BaseVar({self.name!r}, {self.index})"


class BaseField:
    """
    The rational function field Q(v_1, ..., v_m).

    Instances double as the coefficient field of polynomial rings (see
    :class:`pvring.polyring.CoefficientField`).

    Args:
        names: Variable names, in their fixed order
    """

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise FieldPresentationError("a base field needs at least one variable")
        if len(set(names)) != len(names):
            raise FieldPresentationError(f"duplicate variable names in {list(names)}")
        for name in names:
            if not _IDENTIFIER.match(name) or name in _RESERVED:
                raise FieldPresentationError(f"invalid variable name {name!r}")

        self.variables: Tuple[BaseVar, ...] = tuple(BaseVar(n, i) for i, n in enumerate(names))
        self.names = names
        self.poly_ring = SympyPolyRing(",".join(names), QQ, grevlex)
        self._index: Dict[str, int] = {n: i for i, n in enumerate(names)}
        self.zero = RationalFunction(self, self.poly_ring.zero, self.poly_ring.one, canonical=True)
        self.one = RationalFunction(self, self.poly_ring.one, self.poly_ring.one, canonical=True)
        self._parser = ExpressionParser(number=self.from_int, name=self.gen)

    # -- construction ----------------------------------------------------

    def gen(self, name: str) -> "RationalFunction":
        """
        Return the generator with the given name.

        Raises:
            KeyError: If the field has no such variable
        """
        i = self._index[name]
        return RationalFunction(self, self.poly_ring.gens[i], self.poly_ring.one, canonical=True)

    @property
    def gens(self) -> Tuple["RationalFunction", ...]:
        return tuple(self.gen(n) for n in self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def from_int(self, value: int) -> "RationalFunction":
        return RationalFunction(self, self.poly_ring.ground_new(QQ(value)), self.poly_ring.one, canonical=True)

    def from_rational(self, numerator: int, denominator: int = 1) -> "RationalFunction":
        return self.from_int(numerator) / self.from_int(denominator)

    def from_polys(self, numerator, denominator) -> "RationalFunction":
        """Build a canonical fraction from two sympy polynomials of this field's ring."""
        return RationalFunction(self, numerator, denominator)

    def convert(self, value) -> "RationalFunction":
        """
        Coerce ints, QQ elements, names or RationalFunctions into K.

        Raises:
            RingMismatchError: For a RationalFunction of another field
            TypeError: For unsupported values
        """
        if isinstance(value, RationalFunction):
            if value.field != self:
                raise RingMismatchError("rational function belongs to another field")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        try:
            c = QQ.convert(value)
        except Exception as exc:
            raise TypeError(f"cannot convert {value!r} into {self}") from exc
        return RationalFunction(self, self.poly_ring.ground_new(c), self.poly_ring.one, canonical=True)

    __call__ = convert

    def parse(self, text: str) -> "RationalFunction":
        """
        Parse the text syntax: integers, ``p/q``, variable names, ``+ - * ^``
        and parentheses.

        Raises:
            ExpressionSyntaxError: On malformed text
        """
        return self._parser.parse(text)

    # -- coefficient-field contract ----------------------------------------

    def is_zero(self, c: "RationalFunction") -> bool:
        return not c.num

    def describe(self, c: "RationalFunction") -> CoefficientParts:
        negative = c.num.LC < 0
        magnitude = -c if negative else c
        if magnitude.den == self.poly_ring.one and len(magnitude.num) == 1:
            text = magnitude.to_text()
        elif magnitude.den == self.poly_ring.one:
            text = f"({magnitude.to_text()})"
        else:
            text = magnitude.to_text()
        return negative, text, magnitude.num == magnitude.den

    def to_text(self, c: "RationalFunction") -> str:
        return c.to_text()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseField) and self.names == other.names

    def __hash__(self) -> int:
        return hash(("BaseField", self.names))

    def __repr__(self) -> str:
        return f"BaseField({', '.join(self.names)})"

    def __str__(self) -> str:
        return f"QQ({', '.join(self.names)})"


Operand = Union["RationalFunction", int]


class RationalFunction:
    """
    An element of K in canonical reduced-fraction form.

    Instances are immutable; construct them through :class:`BaseField`.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: BaseField, num, den, canonical: bool = False):
        if not canonical:
            num, den = _canonicalize(num, den)
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise RingMismatchError("operands belong to different fields")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        try:
            return self.field.convert(other)
        except TypeError:
            return NotImplemented

    def _new(self, num, den) -> "RationalFunction":
        return RationalFunction(self.field, num, den)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return self._new(self.num + other.num, self.den)
        return self._new(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.field, -self.num, self.den, canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.field.zero
        return self._new(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        """
        Multiplicative inverse.

        Raises:
            ZeroDivisionError: For the zero element
        """
        if not self.num:
            raise ZeroDivisionError("zero has no inverse in K")
        return self._new(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.field, self.num ** exponent, self.den ** exponent, canonical=True)

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.den

    def is_constant(self) -> bool:
        """True iff the element lies in QQ."""
        return self.num.is_ground and self.den.is_ground

    def variables(self) -> Tuple[str, ...]:
        """Names of the variables occurring in numerator or denominator."""
        used = set()
        for poly in (self.num, self.den):
            for monom in poly.monoms():
                used.update(i for i, e in enumerate(monom) if e)
        return tuple(self.field.names[i] for i in sorted(used))

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self.den == self.field.poly_ring.one and self.num == self.field.poly_ring(other)
        return NotImplemented

    def equals(self, other: "RationalFunction") -> bool:
        """Equality by cross-multiplication, independent of canonical form."""
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    # -- printing ----------------------------------------------------------

    def to_text(self) -> str:
        names = self.field.names
        num_text = format_terms(self.num.terms(), names, describe_rational)
        if self.den == self.field.poly_ring.one:
            return num_text
        den_text = format_terms(self.den.terms(), names, describe_rational)
        return f"({num_text})/({den_text})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_text()!r})"


def _canonicalize(num, den):
    """Reduce a fraction of sympy polynomials to canonical form."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    ring = den.ring
    if not num:
        return ring.zero, ring.one
    p, q = num.cancel(den)
    common, q_int = q.clear_denoms()
    content = q_int.content()
    scale = QQ(int(common)) / content
    if q.LC * scale < 0:
        scale = -scale
    return p.mul_ground(scale), q.mul_ground(scale)


def lcm_denominator(values: Iterable[RationalFunction]):
    """Least common multiple of the denominators of several field elements."""
    values = list(values)
    if not values:
        raise ValueError("no values")
    result = values[0].field.poly_ring.one
    for v in values:
        result = result.lcm(v.den)
    return result
