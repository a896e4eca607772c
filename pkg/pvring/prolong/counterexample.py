"""
Two commuting derivations break the prolongation step.

Over K = ℚ(u, v) with ∂₁ = d/du and ∂₂ = d/dv, the ideal a = (v∂₁x + 1, ∂₂x)
of K[x, ∂₁x, ∂₂x] meets K[x] in (0), so it passes the closure test for each
derivation separately. Prolonging with both derivations at once gives the
unit ideal:

    ∂₂(v∂₁x + 1) = v∂₁∂₂x + ∂₁x
    ∂₁(∂₂x)      = ∂₁∂₂x
    hence ∂₁x ∈ b, and 1 = (v∂₁x + 1) - v∂₁x ∈ b.

The jet rings of this package carry a single ∂, so the example uses an
explicit six-variable encoding of the jets of order at most 2.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from ..basefield import BaseField
from ..basefield.operators import OperatorSpec, apply
from ..groebner import IdealPresentation, buchberger, eliminate, groebner, member
from ..polyring import Poly, PolyRing
from .consistency import ConsistencyCertificate, Witness, WitnessStep

ORDER_TWO = ("d11x", "d12x", "d22x")
ORDER_ONE = ("d1x", "d2x")

# jet -> (its ∂₁, its ∂₂)
PROLONGATION = {
    "x": ("d1x", "d2x"),
    "d1x": ("d11x", "d12x"),
    "d2x": ("d12x", "d22x"),
}


@lru_cache(maxsize=None)
def _setting() -> Tuple[PolyRing, Tuple[OperatorSpec, OperatorSpec]]:
    field = BaseField(["u", "v"])
    ring = PolyRing(ORDER_TWO + ORDER_ONE + ("x",), field)
    return ring, (OperatorSpec.d_by(field, "u", "d1"), OperatorSpec.d_by(field, "v", "d2"))


def formal_derivative(poly: Poly, which: int) -> Poly:
    """∂₁ (which=1) or ∂₂ (which=2) of a polynomial in the jets of order <= 1."""
    ring, derivations = _setting()
    op = derivations[which - 1]
    result = poly.map_coefficients(lambda c: apply(op, c))
    for name in poly.support():
        if name not in PROLONGATION:
            raise ValueError(f"{name} has order 2; its prolongation is not encoded")
        result = result + poly.diff(name) * ring.gen(PROLONGATION[name][which - 1])
    return result


def generators_of_a() -> List[Poly]:
    ring, _ = _setting()
    v = ring.constant(ring.field.gen("v"))
    return [v * ring.gen("d1x") + 1, ring.gen("d2x")]


def _terms(with_second: bool) -> List[Tuple[str, str, Poly]]:
    a1, a2 = generators_of_a()
    terms = [
        ("a1", "v∂₁x + 1", a1),
        ("a2", "∂₂x", a2),
        ("d1a1", "∂₁ of a1", formal_derivative(a1, 1)),
        ("d1a2", "∂₁ of a2", formal_derivative(a2, 1)),
    ]
    if with_second:
        terms += [
            ("d2a1", "∂₂ of a1", formal_derivative(a1, 2)),
            ("d2a2", "∂₂ of a2", formal_derivative(a2, 2)),
        ]
    return terms


def _derivation(terms) -> Witness:
    ring, _ = _setting()
    one = ring.one
    v = ring.constant(ring.field.gen("v"))
    by_label: Dict[str, Poly] = {label: g for label, _, g in terms}
    steps = [WitnessStep(label, g, (), note) for label, note, g in terms]
    e1 = by_label["d2a1"]
    e2 = by_label["d1a2"]
    e3 = e1 - v * e2
    unit = by_label["a1"] - v * e3
    steps += [
        WitnessStep("e1", e1, ((one, "d2a1"),), "∂₂(v∂₁x + 1) = v∂₁∂₂x + ∂₁x"),
        WitnessStep("e2", e2, ((one, "d1a2"),), "∂₁(∂₂x) = ∂₁∂₂x"),
        WitnessStep("e3", e3, ((one, "e1"), (-v, "e2")), "∂₁x ∈ b"),
        WitnessStep("e4", unit, ((one, "a1"), (-v, "e3")), "1 ∈ b"),
    ]
    return Witness(tuple(steps), one)


def counterexample_two_derivations() -> ConsistencyCertificate:
    """
    Prolong a = (v∂₁x + 1, ∂₂x) by both derivations and certify 1 ∈ b.

    Returns:
        Certificate with trivial=True and a four-step replayable witness
    """
    ring, _ = _setting()
    terms = _terms(with_second=True)
    b = IdealPresentation(ring, [g for _, _, g in terms])
    basis = buchberger(b)
    return ConsistencyCertificate(
        level=1,
        b=b,
        basis_of_b=basis,
        trivial=basis.is_trivial(),
        witness=_derivation(terms),
        hypothesis_ok=counterexample_closure_checks().passed,
    )


def single_derivation_slice() -> ConsistencyCertificate:
    """
    The same generators prolonged by ∂₁ only: b = (a, ∂₁a) stays proper.

    The point ∂₁x = -1/v with every other jet 0 is a common zero of b.
    """
    ring, _ = _setting()
    b = IdealPresentation(ring, [g for _, _, g in _terms(with_second=False)])
    basis = buchberger(b)
    return ConsistencyCertificate(
        level=1,
        b=b,
        basis_of_b=basis,
        trivial=basis.is_trivial(),
        hypothesis_ok=counterexample_closure_checks().passed,
    )


def slice_point() -> Dict[str, object]:
    """A K-point on which every generator of the single-derivation slice vanishes."""
    ring, _ = _setting()
    field = ring.field
    values = {name: field.zero for name in ring.variables}
    values["d1x"] = -field.gen("v").inverse()
    return values


@dataclass(frozen=True)
class ClosureChecks:
    """a'' = a ∩ K[x] and the closure test ∂ᵢ(a'') ⊂ a for each derivation."""
    lower: IdealPresentation
    first_ok: bool
    second_ok: bool

    @property
    def passed(self) -> bool:
        return self.first_ok and self.second_ok


def counterexample_closure_checks() -> ClosureChecks:
    ring, _ = _setting()
    a = IdealPresentation(ring, generators_of_a())
    lower = eliminate(a, ["x"])
    G = groebner(a)
    lifted = [g.change_ring(ring) for g in lower.generators]
    first_ok = all(member(formal_derivative(g, 1), G) for g in lifted)
    second_ok = all(member(formal_derivative(g, 2), G) for g in lifted)
    return ClosureChecks(lower, first_ok, second_ok)
