"""
Sparse distributed multivariate polynomials over an exact coefficient field.

A :class:`PolyRing` fixes the variable universe, the coefficient field and the
term order; a :class:`Poly` is an immutable sorted list of (monomial,
coefficient) pairs, leading term first. Moving between rings (adding jet
variables, adjoining an auxiliary variable, dropping eliminated variables)
goes through :meth:`Poly.change_ring`, which matches variables by name.
"""

from math import gcd
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import RingMismatchError
from ..utils.expressions import ExpressionParser
from ..utils.formatting import format_terms
from .domains import CoefficientField
from .orders import Monomial, TermOrder, monomial_div, monomial_mul


class PolyRing:
    """
    A polynomial ring k[x_1, ..., x_n] with a term order.

    Args:
        variables: Variable names, unique
        field: Coefficient field
        order: Term order (default grevlex)
        jet_resolver: Optional resolver for jet tokens in :meth:`parse`
    """

    def __init__(
        self,
        variables: Sequence[str],
        field: CoefficientField,
        order: Optional[TermOrder] = None,
        jet_resolver=None,
    ):
        self.variables: Tuple[str, ...] = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variables in {list(self.variables)}")
        self.field = field
        self.order = order or TermOrder.grevlex()
        self.order.validate(len(self.variables))
        self.nvars = len(self.variables)
        self.key = self.order.key_function()
        self._index: Dict[str, int] = {v: i for i, v in enumerate(self.variables)}
        self.unit_monomial: Monomial = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self.unit_monomial: field.one})
        self._parser = ExpressionParser(
            number=self.from_int,
            name=self._resolve_name,
            jet=jet_resolver,
        )

    # -- construction ----------------------------------------------------

    def index(self, name: str) -> int:
        return self._index[name]

    def has_variable(self, name: str) -> bool:
        return name in self._index

    def gen(self, name: str) -> "Poly":
        i = self._index[name]
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one})

    @property
    def gens(self) -> Tuple["Poly", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def _resolve_name(self, name: str):
        if name in self._index:
            return self.gen(name)
        if name in getattr(self.field, "names", ()):
            return self.constant(self.field.gen(name))
        raise KeyError(name)

    def from_int(self, value: int) -> "Poly":
        return self.constant(self.field.convert(value))

    def constant(self, c) -> "Poly":
        c = self.field.convert(c)
        if self.field.is_zero(c):
            return self.zero
        return Poly(self, {self.unit_monomial: c})

    def monomial(self, exponents: Monomial, coeff=None) -> "Poly":
        coeff = self.field.one if coeff is None else self.field.convert(coeff)
        return Poly(self, {tuple(exponents): coeff})

    def from_dict(self, terms: Mapping[Monomial, Any]) -> "Poly":
        return Poly(self, {tuple(m): self.field.convert(c) for m, c in terms.items()})

    def convert(self, value) -> "Poly":
        """Coerce a Poly of this ring, a coefficient, an int or text into the ring."""
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatchError(
                    f"polynomial from {value.ring!r} used in {self!r}"
                )
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    __call__ = convert

    def parse(self, text: str) -> "Poly":
        """
        Parse polynomial text (variables of the ring, coefficient-field names,
        integers, ``+ - * / ^``, parentheses).

        Raises:
            ExpressionSyntaxError: On malformed text
        """
        value = self._parser.parse(text)
        return self.convert(value)

    # -- derived rings -----------------------------------------------------

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def subring(self, keep: Iterable[str]) -> "PolyRing":
        """Ring in the variables ``keep`` (kept in this ring's variable order)."""
        keep = set(keep)
        unknown = keep - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        positions = [i for i, v in enumerate(self.variables) if v in keep]
        return PolyRing(
            [self.variables[i] for i in positions],
            self.field,
            self.order.restrict(positions),
        )

    def extend_front(self, names: Sequence[str]) -> "PolyRing":
        """
        Ring with ``names`` adjoined in front, eliminable as a first block.

        The existing variables keep their relative order (and their blocks,
        when this ring carries a block order).
        """
        k = len(names)
        if self.order.kind == "block":
            rest = [tuple(i + k for i in b) for b in self.order.blocks]
        else:
            rest = [tuple(range(k, k + self.nvars))]
        return PolyRing(tuple(names) + self.variables, self.field, TermOrder.block([tuple(range(k))] + rest))

    def fresh_name(self, stem: str) -> str:
        name = stem
        while name in self._index:
            name += "_"
        return name

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field, self.order))

    def __repr__(self) -> str:
        return f"PolyRing({self.field!r}[{', '.join(self.variables)}], {self.order.describe(self.variables)})"


class Poly:
    """
    An immutable polynomial: terms sorted by decreasing monomial.

    Construct through a :class:`PolyRing`.
    """

    __slots__ = ("ring", "terms", "_coeffs", "_hash")

    def __init__(self, ring: PolyRing, coeffs: Mapping[Monomial, Any]):
        is_zero = ring.field.is_zero
        clean = {m: c for m, c in coeffs.items() if not is_zero(c)}
        self.ring = ring
        self._coeffs = clean
        key = ring.key
        self.terms: Tuple[Tuple[Monomial, Any], ...] = tuple(
            sorted(clean.items(), key=lambda t: key(t[0]), reverse=True)
        )
        self._hash = None

    # -- access ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def coefficients(self) -> Dict[Monomial, Any]:
        return dict(self._coeffs)

    def coefficient(self, monomial: Monomial):
        return self._coeffs.get(tuple(monomial), self.ring.field.zero)

    @property
    def LM(self) -> Monomial:
        return self.terms[0][0]

    @property
    def LC(self):
        return self.terms[0][1]

    @property
    def LT(self) -> "Poly":
        m, c = self.terms[0]
        return Poly(self.ring, {m: c})

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(m for m, _ in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def constant_value(self):
        """The coefficient of the unit monomial."""
        return self._coeffs.get(self.ring.unit_monomial, self.ring.field.zero)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._coeffs), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self._coeffs), default=-1)

    def support(self) -> Tuple[str, ...]:
        """Names of the variables that occur."""
        used = set()
        for m in self._coeffs:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(self.ring.variables[i] for i in sorted(used))

    # -- arithmetic --------------------------------------------------------

    def _other(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine polynomials of {self.ring!r} and {other.ring!r}"
                )
            return other
        try:
            return self.ring.constant(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        zero = self.ring.field.zero
        for m, c in other._coeffs.items():
            result[m] = result.get(m, zero) + c
        return Poly(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        zero = self.ring.field.zero
        for m, c in other._coeffs.items():
            result[m] = result.get(m, zero) - c
        return Poly(self.ring, result)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.is_constant():
            return self.scale(other.constant_value())
        result: Dict[Monomial, Any] = {}
        zero = self.ring.field.zero
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = monomial_mul(m1, m2)
                result[m] = result.get(m, zero) + c1 * c2
        return Poly(self.ring, result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if not other.is_constant() or other.is_zero():
            raise ZeroDivisionError("polynomials can only be divided by nonzero constants")
        return self.scale(self.ring.field.one / other.constant_value())

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponents must be non-negative integers")
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by c."""
        c = self.ring.field.convert(c)
        if self.ring.field.is_zero(c):
            return self.ring.zero
        return Poly(self.ring, {m: a * c for m, a in self._coeffs.items()})

    def mul_term(self, monomial: Monomial, c) -> "Poly":
        """Multiply by the term c * x^monomial."""
        return Poly(self.ring, {monomial_mul(m, monomial): a * c for m, a in self._coeffs.items()})

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.one / self.LC)

    def primitive(self) -> "Poly":
        """
        Integer-primitive associate over QQ: integer coefficients, content 1,
        positive leading coefficient. Other fields fall back to :meth:`monic`.
        """
        if not self.terms or not getattr(self.ring.field, "has_integer_content", False):
            return self.monic()
        field = self.ring.field
        from sympy.polys.domains import QQ

        den = 1
        for _, c in self.terms:
            d = int(QQ.denom(c))
            den = den * d // gcd(den, d)
        num = 0
        for _, c in self.terms:
            num = gcd(num, int(QQ.numer(c)) * (den // int(QQ.denom(c))))
        scale = field.convert(den) / field.convert(num)
        if self.LC < 0:
            scale = -scale
        return self.scale(scale)

    def exact_quotient(self, divisor: "Poly") -> Optional["Poly"]:
        """
        Exact division by a single polynomial.

        Returns:
            The quotient, or None when divisor does not divide self
        """
        divisor = self._other(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = dict(self._coeffs)
        quotient: Dict[Monomial, Any] = {}
        key = self.ring.key
        lm, lc = divisor.terms[0]
        zero = self.ring.field.zero
        while remainder:
            m = max(remainder, key=key)
            q = monomial_div(m, lm)
            if q is None:
                return None
            factor = remainder[m] / lc
            quotient[q] = factor
            for dm, dc in divisor.terms:
                mm = monomial_mul(dm, q)
                value = remainder.get(mm, zero) - factor * dc
                if self.ring.field.is_zero(value):
                    remainder.pop(mm, None)
                else:
                    remainder[mm] = value
        return Poly(self.ring, quotient)

    # -- calculus and substitution -----------------------------------------

    def diff(self, name: str) -> "Poly":
        """Formal partial derivative with respect to a variable."""
        i = self.ring.index(name)
        result: Dict[Monomial, Any] = {}
        for m, c in self._coeffs.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                result[mm] = c * self.ring.field.convert(e)
        return Poly(self.ring, result)

    def map_coefficients(self, fn) -> "Poly":
        """Apply fn to every coefficient (fn must map the field to itself)."""
        return Poly(self.ring, {m: fn(c) for m, c in self._coeffs.items()})

    def compose(self, images: Mapping[str, "Poly"], target: Optional[PolyRing] = None,
                coefficient_map=None) -> "Poly":
        """
        Substitute polynomials for variables.

        Args:
            images: Replacement for each variable (missing: the variable itself,
                which must then exist in target)
            target: Ring of the result (default: this ring)
            coefficient_map: Optional map applied to coefficients first

        Returns:
            The substituted polynomial in target
        """
        target = target or self.ring
        replacement = []
        for name in self.ring.variables:
            if name in images:
                replacement.append(target.convert(images[name]))
            else:
                replacement.append(target.gen(name))
        cache: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            if (i, e) not in cache:
                cache[(i, e)] = replacement[i] ** e
            return cache[(i, e)]

        result = target.zero
        for m, c in self.terms:
            if coefficient_map is not None:
                c = coefficient_map(c)
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Any]):
        """Evaluate at coefficient-field values for every occurring variable."""
        field = self.ring.field
        total = field.zero
        for m, c in self.terms:
            term = c
            for i, e in enumerate(m):
                if e:
                    term = term * field.convert(values[self.ring.variables[i]]) ** e
            total = total + term
        return total

    def change_ring(self, target: PolyRing) -> "Poly":
        """
        Re-express the polynomial in another ring with the same field,
        matching variables by name.

        Raises:
            RingMismatchError: If an occurring variable is missing in target
        """
        if target == self.ring:
            return self
        if target.field != self.ring.field:
            raise RingMismatchError("change_ring cannot change the coefficient field")
        mapping = []
        for i, name in enumerate(self.ring.variables):
            mapping.append(target._index.get(name))
        result = {}
        for m, c in self._coeffs.items():
            exps = [0] * target.nvars
            for i, e in enumerate(m):
                if e:
                    j = mapping[i]
                    if j is None:
                        raise RingMismatchError(
                            f"variable {self.ring.variables[i]!r} does not exist in {target!r}"
                        )
                    exps[j] = e
            result[tuple(exps)] = c
        return Poly(target, result)

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self._coeffs == other._coeffs
        try:
            other = self.ring.constant(other)
        except (TypeError, RingMismatchError):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._coeffs.items())))
        return self._hash

    def to_text(self) -> str:
        return format_terms(self.terms, self.ring.variables, self.ring.field.describe)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


def common_ring(polys: Iterable[Poly]) -> PolyRing:
    """
    The ring shared by a non-empty family of polynomials.

    Raises:
        RingMismatchError: If the polynomials live in different rings
    """
    rings = {p.ring for p in polys}
    if len(rings) != 1:
        raise RingMismatchError(f"expected one ring, found {len(rings)}")
    return rings.pop()


PolyLike = Union[Poly, int, str]
