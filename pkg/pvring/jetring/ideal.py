"""
Ideals of the jet rings.

An ideal of S_d is stored through its numerator ideal in K[X, ..., ∂^d X],
always saturated with respect to det(X); membership of p / det^e is then
membership of p.
"""

import logging
from typing import Iterable, Optional, Union

from ..config import ComputationBudget
from ..exceptions import LevelError, RingMismatchError
from ..groebner import GroebnerBasis, IdealPresentation, buchberger, saturate
from ..groebner.buchberger import Trace
from ..polyring import Poly
from .ring import FilteredElement, JetRing, jet_ring

logger = logging.getLogger(__name__)

ElementLike = Union[FilteredElement, Poly, str]


class JetIdeal:
    """
    A det-saturated ideal of the level-d jet ring, held as a reduced
    Groebner basis of its numerator ideal.

    Build instances with :meth:`generate` unless the basis is already known
    to be saturated.
    """

    def __init__(self, ring: JetRing, basis: GroebnerBasis):
        if basis.ring != ring.poly_ring:
            raise RingMismatchError("basis does not belong to the jet ring")
        self.ring = ring
        self.basis = basis

    @classmethod
    def generate(
        cls,
        ring: JetRing,
        generators: Iterable[ElementLike],
        budget: Optional[ComputationBudget] = None,
        trace: Optional[Trace] = None,
    ) -> "JetIdeal":
        """
        The ideal of S_d generated by the given elements (det-saturated).

        Denominators are cleared: p / det^e generates the same ideal of S_d
        as p.
        """
        polys = [ring_numerator(ring, g) for g in generators]
        presentation = IdealPresentation(ring.poly_ring, polys)
        if presentation.is_zero():
            return cls(ring, buchberger(presentation, budget=budget))
        if ring.det.is_constant():
            return cls(ring, buchberger(presentation, budget=budget, trace=trace))
        saturated = saturate(presentation, ring.det, budget=budget, trace=trace)
        basis = buchberger(saturated, budget=budget)
        logger.debug("jet ideal at level %d: %d generators, basis of %d",
                     ring.level, len(presentation), len(basis))
        return cls(ring, basis)

    @classmethod
    def zero(cls, ring: JetRing) -> "JetIdeal":
        return cls(ring, buchberger(IdealPresentation(ring.poly_ring, [])))

    @classmethod
    def unit(cls, ring: JetRing) -> "JetIdeal":
        return cls(ring, buchberger(IdealPresentation(ring.poly_ring, [ring.poly_ring.one])))

    # -- access -------------------------------------------------------------

    @property
    def level(self) -> int:
        return self.ring.level

    @property
    def generators(self):
        return self.basis.basis

    def elements(self):
        """The generators as elements of S_d."""
        return [FilteredElement(self.ring, g, 0) for g in self.basis.basis]

    def presentation(self) -> IdealPresentation:
        return self.basis.presentation()

    def is_trivial(self) -> bool:
        return self.basis.is_trivial()

    def is_zero(self) -> bool:
        return self.basis.is_zero_ideal()

    def contains(self, element: ElementLike) -> bool:
        return self.basis.contains(ring_numerator(self.ring, element))

    __contains__ = contains

    def contains_ideal(self, other: "JetIdeal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError("ideals belong to different jet rings")
        return all(self.basis.contains(g) for g in other.generators)

    def reduce(self, element: ElementLike) -> Poly:
        """Normal form of the numerator."""
        return self.basis.reduce(ring_numerator(self.ring, element))

    def is_saturated(self, budget: Optional[ComputationBudget] = None) -> bool:
        """Re-run the det-saturation and compare (a fixpoint check)."""
        if self.is_zero() or self.is_trivial():
            return True
        again = buchberger(saturate(self.basis, self.ring.det, budget=budget), budget=budget)
        return again.basis == self.basis.basis

    # -- levels -------------------------------------------------------------

    def restrict(self, level: int) -> "JetIdeal":
        """
        The intersection with S_level (elimination of the higher jets).

        The jet-ring order eliminates higher orders first, so the reduced
        basis elements free of them form the reduced basis of the
        intersection.
        """
        if level > self.level:
            raise LevelError(f"cannot restrict a level-{self.level} ideal to level {level}")
        target = jet_ring(self.ring.dfield, self.ring.n, level)
        keep = set(target.poly_ring.variables)
        kept = [g.change_ring(target.poly_ring) for g in self.generators if set(g.support()) <= keep]
        presentation = IdealPresentation(target.poly_ring, kept)
        return JetIdeal(target, GroebnerBasis(target.poly_ring, kept, presentation))

    def embed(self, level: int) -> "JetIdeal":
        """The extension of the ideal to S_level for level >= d."""
        if level < self.level:
            raise LevelError(f"cannot embed a level-{self.level} ideal at level {level}")
        target = jet_ring(self.ring.dfield, self.ring.n, level)
        moved = [g.change_ring(target.poly_ring) for g in self.generators]
        presentation = IdealPresentation(target.poly_ring, moved)
        return JetIdeal(target, GroebnerBasis(target.poly_ring, moved, presentation))

    # -- comparison and printing ------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, JetIdeal) and self.ring == other.ring and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ring, self.basis))

    def to_text(self) -> str:
        return self.basis.to_text()

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"JetIdeal(level={self.level}, [{self.to_text()}])"


def ring_numerator(ring: JetRing, element: ElementLike) -> Poly:
    """The numerator polynomial of an element given as element, polynomial or text."""
    if isinstance(element, str):
        element = ring.parse(element)
    if isinstance(element, FilteredElement):
        if element.ring != ring:
            raise RingMismatchError(f"element of {element.ring!r} used in {ring!r}")
        return element.poly
    return ring.poly_ring.convert(element)
