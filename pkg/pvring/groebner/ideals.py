"""
Ideal-theoretic queries built on the Buchberger kernel: membership,
triviality, elimination, saturation, radical membership and lifting.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Union

from ..config import ComputationBudget
from ..exceptions import RingMismatchError
from ..polyring import Poly, PolyRing, TermOrder
from .basis import GroebnerBasis, IdealPresentation, normal_form
from .buchberger import Trace, buchberger

logger = logging.getLogger(__name__)

IdealLike = Union[IdealPresentation, GroebnerBasis]


def groebner(ideal: IdealLike, budget: Optional[ComputationBudget] = None,
             trace: Optional[Trace] = None) -> GroebnerBasis:
    """Reduced Groebner basis of an ideal (returned as-is for a basis)."""
    if isinstance(ideal, GroebnerBasis):
        return ideal
    return buchberger(ideal, budget=budget, trace=trace)


def member(f: Poly, G: IdealLike, budget: Optional[ComputationBudget] = None) -> bool:
    """True iff the normal form of f modulo the basis is zero."""
    return groebner(G, budget).contains(f)


def is_trivial(G: IdealLike, budget: Optional[ComputationBudget] = None) -> bool:
    """True iff the ideal is the unit ideal."""
    return groebner(G, budget).is_trivial()


def ideals_equal(I: IdealLike, J: IdealLike, budget: Optional[ComputationBudget] = None) -> bool:
    """Compare two ideals of the same ring through their reduced bases."""
    gi = groebner(I, budget)
    gj = groebner(J, budget)
    if gi.ring.variables != gj.ring.variables:
        raise RingMismatchError("ideals live in rings with different variables")
    if gi.ring != gj.ring:
        return gi.contains_ideal(g.change_ring(gi.ring) for g in gj.basis) and gj.contains_ideal(
            g.change_ring(gj.ring) for g in gi.basis
        )
    return gi.basis == gj.basis


def _elimination_ring(ring: PolyRing, keep: Sequence[str]) -> PolyRing:
    """The ring itself when keep already forms trailing blocks, else a block order."""
    keep_pos = sorted(ring.index(v) for v in keep)
    keep_set = set(keep_pos)
    order = ring.order
    if order.kind == "block":
        trailing = set()
        for block in reversed(order.blocks):
            if trailing == keep_set:
                break
            trailing.update(block)
        if trailing == keep_set:
            return ring
    others = [i for i in range(ring.nvars) if i not in keep_set]
    if not others:
        return ring
    if not keep_pos:
        return ring.with_order(TermOrder.grevlex())
    return ring.with_order(TermOrder.block([others, keep_pos]))


def eliminate(
    I: IdealLike,
    keep: Iterable[str],
    budget: Optional[ComputationBudget] = None,
    trace: Optional[Trace] = None,
) -> IdealPresentation:
    """
    Generators of the elimination ideal I ∩ k[keep].

    A block order with the eliminated variables in the leading block is
    installed when the ring's own order does not already have ``keep`` as
    its trailing blocks; the elements of the Groebner basis free of the
    eliminated variables generate the intersection.

    Args:
        I: Ideal (presentation or basis)
        keep: Names of the variables to keep

    Returns:
        IdealPresentation in ``ring.subring(keep)`` (the reduced basis
        elements lying in the subring, in canonical order)
    """
    keep = list(keep)
    ring = I.ring
    target = ring.subring(keep)
    work_ring = _elimination_ring(ring, keep)
    if isinstance(I, GroebnerBasis) and work_ring == ring:
        G = I
    else:
        gens = I.basis if isinstance(I, GroebnerBasis) else I.generators
        G = buchberger(IdealPresentation(work_ring, [g.change_ring(work_ring) for g in gens]),
                       budget=budget, trace=trace)
    keep_set = set(keep)
    kept = [g for g in G.basis if set(g.support()) <= keep_set]
    logger.debug("eliminated %d variables: %d of %d basis elements kept",
                 ring.nvars - len(keep_set), len(kept), len(G.basis))
    return IdealPresentation(target, [g.change_ring(target) for g in kept])


def _with_inverse_variable(ideal: IdealLike, f: Poly, stem: str = "w"):
    ring = ideal.ring
    f = ring.convert(f)
    w = ring.fresh_name(stem)
    ext = ring.extend_front([w])
    gens = ideal.basis if isinstance(ideal, GroebnerBasis) else ideal.generators
    moved = [g.change_ring(ext) for g in gens]
    moved.append(ext.one - ext.gen(w) * f.change_ring(ext))
    return IdealPresentation(ext, moved), w


def saturate(
    I: IdealLike,
    f: Poly,
    budget: Optional[ComputationBudget] = None,
    trace: Optional[Trace] = None,
) -> IdealPresentation:
    """
    The saturation I : f^∞, computed as (I + (1 - w f)) ∩ k[vars].

    Returns:
        Reduced generators of the saturation in I's ring

    Raises:
        ValueError: If f is zero
    """
    if I.ring.convert(f).is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    extended, w = _with_inverse_variable(I, f)
    G = buchberger(extended, budget=budget, trace=trace)
    ring = I.ring
    kept = [g.change_ring(ring) for g in G.basis if w not in g.support()]
    logger.debug("saturation in %d variables: %d generators", ring.nvars, len(kept))
    return IdealPresentation(ring, kept)


def radical_member(
    f: Poly,
    I: IdealLike,
    budget: Optional[ComputationBudget] = None,
    trace: Optional[Trace] = None,
) -> bool:
    """f ∈ √I, decided by triviality of I + (1 - w f) (Rabinowitsch)."""
    f = I.ring.convert(f)
    if f.is_zero():
        return True
    extended, _ = _with_inverse_variable(I, f)
    return buchberger(extended, budget=budget, trace=trace).is_trivial()


def lift(
    f: Poly,
    I: IdealPresentation,
    budget: Optional[ComputationBudget] = None,
    trace: Optional[Trace] = None,
) -> Optional[List[Poly]]:
    """
    Express f as a combination of the generators of I.

    Returns:
        Cofactors c_k with f = sum(c_k * I.generators[k]), or None when f is
        not in the ideal
    """
    f = I.ring.convert(f)
    G = buchberger(I, budget=budget, trace=trace, track=True)
    remainder, quotients = normal_form(f, G.basis, with_quotients=True)
    if not remainder.is_zero():
        return None
    ring = I.ring
    result = [ring.zero] * len(I.generators)
    for q, cof in zip(quotients, G.cofactors):
        if q.is_zero():
            continue
        result = [r + q * c for r, c in zip(result, cof)]
    return result


def combination(cofactors: Sequence[Poly], generators: Sequence[Poly]) -> Poly:
    """Evaluate sum(c_k * g_k); the replay side of :func:`lift`."""
    if len(cofactors) != len(generators):
        raise ValueError("cofactor and generator counts differ")
    if not generators:
        raise ValueError("empty combination")
    total = generators[0].ring.zero
    for c, g in zip(cofactors, generators):
        total = total + c * g
    return total
