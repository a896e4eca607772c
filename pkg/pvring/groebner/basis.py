"""
Ideal presentations and reduced Groebner bases.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import RingMismatchError, UnsupportedQuotientError
from ..polyring import Monomial, Poly, PolyRing
from ..polyring.orders import monomial_div, monomial_divides, monomial_mul


class IdealPresentation:
    """
    A finitely generated ideal: a ring and a list of generators.

    Zero generators are dropped; the order of the list does not change the
    ideal.

    Args:
        ring: Polynomial ring (variables and term order)
        generators: Polynomials of ``ring`` (or text / constants coercible to it)
    """

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring.convert(g)
            if g:
                gens.append(g)
        self.generators: Tuple[Poly, ...] = tuple(gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def extend(self, more: Iterable) -> "IdealPresentation":
        return IdealPresentation(self.ring, list(self.generators) + list(more))

    def change_ring(self, ring: PolyRing) -> "IdealPresentation":
        """Move the generators into another ring (variables matched by name)."""
        return IdealPresentation(ring, [g.change_ring(ring) for g in self.generators])

    def to_text(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(g.to_text() for g in self.generators) + ")"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdealPresentation)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __repr__(self) -> str:
        return f"IdealPresentation({self.to_text()})"


def normal_form(
    poly: Poly,
    divisors: Sequence[Poly],
    with_quotients: bool = False,
) -> Tuple[Poly, Optional[List[Poly]]]:
    """
    Full multivariate division of ``poly`` by ``divisors``.

    Every term of the remainder is irreducible by the leading monomials of
    the divisors; the first divisor (in the given order) whose leading
    monomial divides a term is used.

    Args:
        poly: Dividend
        divisors: Nonzero divisors in the same ring
        with_quotients: Also return the quotients

    Returns:
        (remainder, quotients) with poly = sum(q_k * divisor_k) + remainder;
        quotients is None unless requested
    """
    ring = poly.ring
    for d in divisors:
        if d.ring != ring:
            raise RingMismatchError("divisor belongs to another ring")
    field = ring.field
    key = ring.key
    zero = field.zero
    is_zero = field.is_zero
    work: Dict[Monomial, object] = poly.coefficients()
    remainder: Dict[Monomial, object] = {}
    quotients: Optional[List[Dict[Monomial, object]]] = (
        [{} for _ in divisors] if with_quotients else None
    )
    leads = [(d.LM, d.LC) for d in divisors]

    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for idx, (lm, lc) in enumerate(leads):
            q = monomial_div(m, lm)
            if q is None:
                continue
            factor = c / lc
            for dm, dc in divisors[idx].terms[1:]:
                mm = monomial_mul(dm, q)
                value = work.get(mm, zero) - factor * dc
                if is_zero(value):
                    work.pop(mm, None)
                else:
                    work[mm] = value
            if quotients is not None:
                slot = quotients[idx]
                value = slot.get(q, zero) + factor
                if is_zero(value):
                    slot.pop(q, None)
                else:
                    slot[q] = value
            break
        else:
            remainder[m] = c

    rem = Poly(ring, remainder)
    if quotients is None:
        return rem, None
    return rem, [Poly(ring, q) for q in quotients]


class GroebnerBasis:
    """
    A reduced Groebner basis: monic, interreduced, sorted by decreasing
    leading monomial.

    Attributes:
        ring: Ring (and term order) of the basis
        basis: The basis polynomials
        generators: The presentation the basis was computed from
        cofactors: For each basis element, polynomials c_k with
            element = sum(c_k * generators[k]) (only for tracked computations)
        reductions: S-pair reductions spent computing the basis
    """

    reduced = True

    def __init__(
        self,
        ring: PolyRing,
        basis: Sequence[Poly],
        generators: Optional[IdealPresentation] = None,
        cofactors: Optional[Sequence[Sequence[Poly]]] = None,
        reductions: int = 0,
    ):
        self.ring = ring
        self.basis: Tuple[Poly, ...] = tuple(basis)
        self.generators = generators if generators is not None else IdealPresentation(ring, basis)
        self.cofactors = tuple(tuple(c) for c in cofactors) if cofactors is not None else None
        self.reductions = reductions

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.LM for g in self.basis)

    # -- queries -----------------------------------------------------------

    def reduce(self, poly: Poly) -> Poly:
        """Normal form of poly modulo the basis (unique for a reduced basis)."""
        poly = self.ring.convert(poly)
        remainder, _ = normal_form(poly, self.basis)
        return remainder

    def contains(self, poly: Poly) -> bool:
        return self.reduce(poly).is_zero()

    __contains__ = contains

    def contains_ideal(self, ideal: Iterable[Poly]) -> bool:
        return all(self.contains(g) for g in ideal)

    def is_trivial(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def is_zero_dimensional(self) -> bool:
        """
        True iff the quotient ring is finite-dimensional over the coefficient
        field: every variable has a pure power among the leading monomials.
        """
        if self.is_trivial():
            return True
        pure = set()
        for lm in self.leading_monomials():
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                pure.add(support[0])
        return len(pure) == self.ring.nvars

    def standard_monomials(self) -> Tuple[Monomial, ...]:
        """
        The staircase: monomials not divisible by any leading monomial,
        in decreasing term order.

        Raises:
            UnsupportedQuotientError: If the quotient is infinite-dimensional
        """
        if not self.is_zero_dimensional():
            raise UnsupportedQuotientError(
                "the quotient is not finite-dimensional: no finite staircase"
            )
        if self.is_trivial():
            return ()
        nvars = self.ring.nvars
        bounds = [0] * nvars
        for lm in self.leading_monomials():
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1:
                i = support[0]
                bounds[i] = lm[i] if not bounds[i] else min(bounds[i], lm[i])
        leads = self.leading_monomials()
        found = []

        def walk(prefix: List[int], i: int):
            if i == nvars:
                m = tuple(prefix)
                if not any(monomial_divides(lm, m) for lm in leads):
                    found.append(m)
                return
            for e in range(bounds[i]):
                prefix.append(e)
                walk(prefix, i + 1)
                prefix.pop()

        walk([], 0)
        found.sort(key=self.ring.key, reverse=True)
        return tuple(found)

    def presentation(self) -> IdealPresentation:
        return IdealPresentation(self.ring, self.basis)

    # -- comparison and printing --------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.basis))

    def to_text(self) -> str:
        """Comma-separated basis in canonical order; ``0`` for the zero ideal."""
        if not self.basis:
            return "0"
        return ", ".join(g.to_text() for g in self.basis)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"GroebnerBasis([{self.to_text()}])"
