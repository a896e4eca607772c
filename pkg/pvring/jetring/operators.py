"""
The actions of ∂, the automorphisms and the delta-derivations on jets.

For a system sigma(X) = A X, delta(X) = B X the actions on jets follow from
commutation with ∂ and the Leibniz rule:

    sigma(∂^k X) = sum_l C(k, l) ∂^l(A) ∂^(k-l) X
    delta(∂^k X) = sum_l C(k, l) ∂^l(B) ∂^(k-l) X

and on the localization by sigma(det X) = det(A) det X and
delta(det X) = trace(B) det X.
"""

from math import comb
from typing import TYPE_CHECKING, Dict

from ..exceptions import LevelError, UnknownOperatorError
from ..polyring import Poly
from .ring import FilteredElement, JetRing, jet_ring

if TYPE_CHECKING:  # pragma: no cover
    from ..linsys.system import LinearSystem


def total_derivative(poly: Poly, source: JetRing, target: JetRing) -> Poly:
    """∂ of a numerator polynomial, from the level-d ring into the level-(d+1) ring."""
    partial = source.dfield.partial_apply
    lifted = poly.change_ring(target.poly_ring)
    result = lifted.map_coefficients(partial)
    for name in poly.support():
        v = source.jet_of(name)
        result = result + lifted.diff(v.name) * target.var(v.row, v.col, v.order + 1)
    return result


def d_apply(f: FilteredElement) -> FilteredElement:
    """
    The total derivative ∂ from S_d into S_{d+1}.

    ∂(p / det^e) = (∂p * det - e * p * ∂det) / det^(e+1)
    """
    source = f.ring
    target = jet_ring(source.dfield, source.n, source.level + 1)
    dp = total_derivative(f.poly, source, target)
    e = f.det_power
    if e == 0:
        return FilteredElement(target, dp, 0)
    det = target.det
    ddet = total_derivative(source.det, source, target)
    p = f.poly.change_ring(target.poly_ring)
    return FilteredElement(target, dp * det - p * ddet.scale(e), e + 1)


def _jet_images(system: "LinearSystem", ring: JetRing, op_id: str, inverse: bool) -> Dict[str, Poly]:
    key = (ring, op_id, inverse)
    cached = system.jet_image_cache.get(key)
    if cached is not None:
        return cached
    images = {}
    R = ring.poly_ring
    for v in ring.jet_vars:
        total = R.zero
        for l in range(v.order + 1):
            M = system.derived_matrix(op_id, l, inverse)
            binom = comb(v.order, l)
            for m in range(1, ring.n + 1):
                c = M[v.row - 1, m - 1]
                if c:
                    total = total + ring.var(m, v.col, v.order - l).scale(c * binom)
        images[v.name] = total
    system.jet_image_cache[key] = images
    return images


def _check_ring(system: "LinearSystem", f: FilteredElement) -> None:
    if system.n != f.ring.n:
        raise LevelError(f"element has n={f.ring.n}, system has n={system.n}")


def sigma_apply(
    op_id: str,
    f: FilteredElement,
    system: "LinearSystem",
    inverse: bool = False,
) -> FilteredElement:
    """
    Apply an automorphism (or its inverse) to an element of S_d.

    Raises:
        UnknownOperatorError: If op_id is not an automorphism of the system
    """
    if op_id not in system.A:
        raise UnknownOperatorError(f"{op_id!r} is not an automorphism of the system")
    _check_ring(system, f)
    dfield = f.ring.dfield
    sigma = dfield.operator(op_id)
    if inverse:
        coefficient_map = lambda c: dfield.apply_inverse(sigma, c)
        det_factor = system.A_tilde[op_id].det()
    else:
        coefficient_map = lambda c: dfield.apply(sigma, c)
        det_factor = system.A[op_id].det()
    images = _jet_images(system, f.ring, op_id, inverse)
    poly = f.poly.compose(images, coefficient_map=coefficient_map)
    e = f.det_power
    if e:
        poly = poly.scale(det_factor ** (-e))
    return FilteredElement(f.ring, poly, e)


def delta_apply(op_id: str, f: FilteredElement, system: "LinearSystem") -> FilteredElement:
    """
    Apply a delta-derivation to an element of S_d.

    δ(p / det^e) = δ(p) / det^e - e * trace(B) * p / det^e

    Raises:
        UnknownOperatorError: If op_id is not a derivation of the system
    """
    if op_id not in system.B:
        raise UnknownOperatorError(f"{op_id!r} is not a delta-derivation of the system")
    _check_ring(system, f)
    dfield = f.ring.dfield
    delta = dfield.operator(op_id)
    images = _jet_images(system, f.ring, op_id, False)
    p = f.poly
    result = p.map_coefficients(lambda c: dfield.apply(delta, c))
    for name in p.support():
        result = result + p.diff(name) * images[name]
    e = f.det_power
    if e:
        result = result - p.scale(system.B[op_id].trace() * e)
    return FilteredElement(f.ring, result, e)


def embed(f: FilteredElement, level: int) -> FilteredElement:
    """
    The same element in the level-``level`` ring.

    Raises:
        LevelError: If level is below the element's level
    """
    if level < f.level:
        raise LevelError(f"cannot embed a level-{f.level} element at level {level}")
    target = jet_ring(f.ring.dfield, f.ring.n, level)
    return FilteredElement(target, f.poly.change_ring(target.poly_ring), f.det_power)


def restrict(f: FilteredElement, level: int) -> FilteredElement:
    """
    The same element in a lower-level ring.

    Raises:
        LevelError: If a jet of order above level occurs
    """
    if f.order() > level:
        raise LevelError(f"element of order {f.order()} does not lie in S_{level}")
    target = jet_ring(f.ring.dfield, f.ring.n, level)
    return FilteredElement(target, f.poly.change_ring(target.poly_ring), f.det_power)
