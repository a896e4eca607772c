"""
Order-filtered jet rings S_d = K[X, ∂X, ..., ∂^d X, 1/det(X)].

Elements of S_d are stored as a numerator polynomial in the jet variables
and a power of det(X) in the denominator. The variables of a level-d ring
are ordered by decreasing jet order, with one block of the term order per
jet order, so that

    * the elements of a Groebner basis free of the jets of order > e
      generate the intersection with S_e, and
    * restricting the level-(d+1) ring to the jets of order <= d gives
      exactly the level-d ring.
"""

from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple

from ..basefield import DifferenceDifferentialField, RationalFunction
from ..exceptions import LevelError, RingMismatchError
from ..polyring import Poly, PolyRing, TermOrder
from ..utils.expressions import JET, ExpressionParser, tokenize


def leibniz_det(rows, zero, one):
    """Determinant by the permutation expansion (any commutative ring)."""
    n = len(rows)
    total = zero
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = one
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total - term if inversions % 2 else total + term
    return total


def jet_key(name: str) -> Tuple[int, int, int]:
    """(row, col, order) of a jet variable name such as ``X'[1,2]``."""
    tokens = tokenize(name, jets=True)
    if tokens[0].kind != JET or len(tokens) != 2:
        raise LevelError(f"{name!r} is not a jet variable")
    return tokens[0].value


class JetVar:
    """
    The jet ∂^order(X[row, col]) (rows and columns count from 1).
    """

    __slots__ = ("row", "col", "order")

    def __init__(self, row: int, col: int, order: int):
        self.row = row
        self.col = col
        self.order = order

    @property
    def name(self) -> str:
        if self.order == 0:
            return f"X[{self.row},{self.col}]"
        if self.order == 1:
            return f"X'[{self.row},{self.col}]"
        return f"X^({self.order})[{self.row},{self.col}]"

    def shifted(self, by: int = 1) -> "JetVar":
        return JetVar(self.row, self.col, self.order + by)

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.order, self.row, self.col)

    def __eq__(self, other) -> bool:
        return isinstance(other, JetVar) and self.sort_key() == other.sort_key()

    def __hash__(self) -> int:
        return hash(self.sort_key())

    def __repr__(self) -> str:
        return f"JetVar({self.name})"


class JetRing:
    """
    The level-d jet ring for n x n systems over a difference-differential
    field.

    Use :func:`jet_ring` to get the shared instance for (field, n, level).

    Args:
        dfield: Field description (provides K and the parameter derivation)
        n: Matrix size
        level: Highest jet order d
    """

    def __init__(self, dfield: DifferenceDifferentialField, n: int, level: int):
        if n < 1:
            raise LevelError("matrix size must be at least 1")
        if level < 0:
            raise LevelError(f"level must be non-negative, got {level}")
        self.dfield = dfield
        self.field = dfield.field
        self.n = n
        self.level = level

        self.jet_vars: Tuple[JetVar, ...] = tuple(
            JetVar(i, j, k)
            for k in range(level, -1, -1)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        )
        names = [v.name for v in self.jet_vars]
        per_order = n * n
        blocks = [tuple(range(b * per_order, (b + 1) * per_order)) for b in range(level + 1)]
        self.poly_ring = PolyRing(
            names,
            self.field,
            TermOrder.block(blocks),
            jet_resolver=self._jet_poly,
        )
        self._by_key: Dict[Tuple[int, int, int], JetVar] = {v.sort_key(): v for v in self.jet_vars}

        order0 = [[self.var(i, j, 0) for j in range(1, n + 1)] for i in range(1, n + 1)]
        self.det: Poly = leibniz_det(order0, self.poly_ring.zero, self.poly_ring.one)
        self.zero = FilteredElement(self, self.poly_ring.zero, 0)
        self.one = FilteredElement(self, self.poly_ring.one, 0)
        self._parser = ExpressionParser(
            number=lambda v: self.constant(v),
            name=self._resolve_name,
            jet=lambda i, j, k: self.element(self.var(i, j, k)),
        )
        self._poly_parser = ExpressionParser(
            number=self.poly_ring.from_int,
            name=self._resolve_poly_name,
            jet=self._jet_poly,
        )

    # -- variables -----------------------------------------------------------

    def jet(self, row: int, col: int, order: int) -> JetVar:
        """
        Raises:
            LevelError: If the jet does not belong to this ring
        """
        try:
            return self._by_key[(order, row, col)]
        except KeyError:
            raise LevelError(
                f"jet X^({order})[{row},{col}] is not a variable of the level-{self.level} ring (n={self.n})"
            ) from None

    def var(self, row: int, col: int, order: int = 0) -> Poly:
        return self.poly_ring.gen(self.jet(row, col, order).name)

    def _jet_poly(self, row: int, col: int, order: int) -> Poly:
        return self.var(row, col, order)

    def variables_up_to(self, order: int) -> Tuple[str, ...]:
        """Names of the jet variables of order <= order."""
        return tuple(v.name for v in self.jet_vars if v.order <= order)

    def jet_of(self, name: str) -> JetVar:
        return self.jet_vars[self.poly_ring.index(name)]

    def order_of(self, poly: Poly) -> int:
        """Highest jet order occurring in a polynomial (-1 for constants)."""
        return max((self.jet_of(v).order for v in poly.support()), default=-1)

    # -- elements ------------------------------------------------------------

    def constant(self, c) -> "FilteredElement":
        return FilteredElement(self, self.poly_ring.constant(self.field.convert(c)), 0)

    def element(self, poly: Poly, det_power: int = 0) -> "FilteredElement":
        return FilteredElement(self, self.poly_ring.convert(poly), det_power)

    def det_element(self) -> "FilteredElement":
        return FilteredElement(self, self.det, 0)

    def _resolve_name(self, name: str):
        if name == "det":
            return self.det_element()
        if name in self.field.names:
            return self.constant(self.field.gen(name))
        raise KeyError(name)

    def _resolve_poly_name(self, name: str):
        if name == "det":
            return self.det
        if name in self.field.names:
            return self.poly_ring.constant(self.field.gen(name))
        raise KeyError(name)

    def parse(self, text: str) -> "FilteredElement":
        """
        Parse jet text: ``X[i,j]``, ``X'[i,j]``, ``X''[i,j]``, ``X^(k)[i,j]``,
        ``det``, base-field names and numbers. Division is allowed by
        nonzero elements of K and by powers of det.
        """
        return self._parser.parse(text)

    def parse_poly(self, text: str) -> Poly:
        """Parse a numerator polynomial (``det`` stands for the det polynomial)."""
        return self.poly_ring.convert(self._poly_parser.parse(text))

    # -- identity --------------------------------------------------------------

    def _key(self):
        return (id(self.dfield), self.n, self.level)

    def __eq__(self, other) -> bool:
        return isinstance(other, JetRing) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"JetRing(n={self.n}, level={self.level}, {self.field})"


def jet_ring(dfield: DifferenceDifferentialField, n: int, level: int) -> JetRing:
    """The shared level-d jet ring, kept in the field's ring cache."""
    key = (n, level)
    ring = dfield.ring_cache.get(key)
    if ring is None:
        ring = dfield.ring_cache[key] = JetRing(dfield, n, level)
    return ring


class FilteredElement:
    """
    poly / det(X)^det_power in a jet ring.

    Canonical form: when det_power > 0 the numerator is not divisible by
    det(X).
    """

    __slots__ = ("ring", "poly", "det_power")

    def __init__(self, ring: JetRing, poly: Poly, det_power: int = 0):
        if det_power < 0:
            raise ValueError("det_power must be non-negative")
        if poly.ring != ring.poly_ring:
            raise RingMismatchError("numerator does not belong to the jet ring")
        if poly.is_zero():
            det_power = 0
        while det_power > 0:
            q = poly.exact_quotient(ring.det)
            if q is None:
                break
            poly = q
            det_power -= 1
        self.ring = ring
        self.poly = poly
        self.det_power = det_power

    @property
    def level(self) -> int:
        return self.ring.level

    def order(self) -> int:
        """Highest jet order occurring (-1 for elements of K)."""
        return self.ring.order_of(self.poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    # -- arithmetic ------------------------------------------------------------

    def _other(self, other) -> Optional["FilteredElement"]:
        if isinstance(other, FilteredElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring!r} and {other.ring!r}"
                )
            return other
        if isinstance(other, Poly):
            return FilteredElement(self.ring, other, 0)
        try:
            return self.ring.constant(other)
        except TypeError:
            return None

    def _lift(self, power: int) -> Poly:
        return self.poly * self.ring.det ** (power - self.det_power)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        e = max(self.det_power, other.det_power)
        return FilteredElement(self.ring, self._lift(e) + other._lift(e), e)

    __radd__ = __add__

    def __neg__(self) -> "FilteredElement":
        return FilteredElement(self.ring, -self.poly, self.det_power)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return FilteredElement(self.ring, self.poly * other.poly, self.det_power + other.det_power)

    __rmul__ = __mul__

    def unit_parts(self) -> Optional[Tuple[RationalFunction, int]]:
        """(c, k) with self = c * det^k for a nonzero c in K, or None."""
        poly = self.poly
        if poly.is_zero():
            return None
        k = 0
        while not poly.is_constant():
            q = poly.exact_quotient(self.ring.det)
            if q is None:
                return None
            poly = q
            k += 1
        return poly.constant_value(), k - self.det_power

    def inverse(self) -> "FilteredElement":
        """
        Raises:
            ZeroDivisionError: Unless the element is c * det^k
        """
        parts = self.unit_parts()
        if parts is None:
            raise ZeroDivisionError(f"{self.to_text()} is not a unit of the jet ring")
        c, k = parts
        ring = self.ring
        inv_c = ring.poly_ring.constant(c.inverse())
        if k >= 0:
            return FilteredElement(ring, inv_c, k)
        return FilteredElement(ring, inv_c * ring.det ** (-k), 0)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "FilteredElement":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FilteredElement(self.ring, self.poly ** exponent, self.det_power * exponent)

    # -- comparison and printing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FilteredElement):
            try:
                other = self._other(other)
            except RingMismatchError:
                return False
            if other is None:
                return NotImplemented
        return (
            self.ring == other.ring
            and self.det_power == other.det_power
            and self.poly == other.poly
        )

    def __hash__(self) -> int:
        return hash((self.poly, self.det_power))

    def to_text(self) -> str:
        text = self.poly.to_text()
        if self.det_power == 0:
            return text
        den = "det" if self.det_power == 1 else f"det^{self.det_power}"
        return f"({text})/{den}"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FilteredElement({self.to_text()!r})"
