"""
Buchberger's algorithm with the Gebauer-Moeller pair criteria.

The update step follows the GROEBNERNEWS2 formulation (Becker and
Weispfenning, page 230): new pairs (h, g) are filtered by the chain and
product criteria, old pairs whose lcm is divisible by LM(h) are dropped
unless h forms the same lcm with one of their members, and basis elements
whose leading monomial is a multiple of LM(h) leave the basis. All pair
and basis bookkeeping uses ordered lists, so the computation (and its trace)
is deterministic.

With ``track=True`` every intermediate element carries cofactors with
respect to the input generators, so the result can certify memberships
(see :func:`pvring.groebner.ideals.lift`).
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from ..config import ComputationBudget
from ..exceptions import BudgetExhaustedError
from ..polyring import Poly, PolyRing
from ..polyring.orders import monomial_deg, monomial_div, monomial_lcm, monomial_mul
from ..utils.formatting import format_monomial
from .basis import GroebnerBasis, IdealPresentation, normal_form

logger = logging.getLogger(__name__)

Trace = Callable[[str], None]


class _Element:
    """A polynomial of the growing basis, with optional cofactors."""

    __slots__ = ("poly", "cofactors")

    def __init__(self, poly: Poly, cofactors: Optional[List[Poly]]):
        self.poly = poly
        self.cofactors = cofactors

    def scaled(self, c) -> "_Element":
        cof = None if self.cofactors is None else [q.scale(c) for q in self.cofactors]
        return _Element(self.poly.scale(c), cof)


def _normalize(element: _Element, final: bool) -> _Element:
    """Primitive over QQ while the basis grows, monic in the final basis."""
    poly = element.poly
    if final or not getattr(poly.ring.field, "has_integer_content", False):
        target = poly.monic()
    else:
        target = poly.primitive()
    if target == poly:
        return element
    return element.scaled(target.LC / poly.LC)


def _combine(
    base: Optional[List[Poly]],
    quotients: Sequence[Poly],
    elements: Sequence[_Element],
) -> Optional[List[Poly]]:
    """Cofactors of base - sum(q_k * element_k)."""
    if base is None:
        return None
    result = list(base)
    for q, element in zip(quotients, elements):
        if q.is_zero():
            continue
        result = [r - q * c for r, c in zip(result, element.cofactors)]
    return result


class _Kernel:
    def __init__(
        self,
        ring: PolyRing,
        budget: ComputationBudget,
        trace: Optional[Trace],
        track: bool,
    ):
        self.ring = ring
        self.budget = budget
        self.trace = trace
        self.track = track
        self.f: List[_Element] = []

    def _emit(self, message: str) -> None:
        if self.trace is not None:
            self.trace(message)

    def _lm_text(self, i: int) -> str:
        return format_monomial(self.f[i].poly.LM, self.ring.variables) or "1"

    def _check_degree(self, poly: Poly) -> None:
        degree = poly.degree()
        if degree > self.budget.max_degree:
            raise BudgetExhaustedError(
                f"basis element of degree {degree} exceeds the degree cap {self.budget.max_degree}"
            )

    def _add(self, element: _Element) -> int:
        self.f.append(element)
        return len(self.f) - 1

    # -- Gebauer-Moeller update -------------------------------------------

    def update(
        self, G: List[int], B: List[Tuple[int, int]], ih: int
    ) -> Tuple[List[int], List[Tuple[int, int]]]:
        f = self.f
        mh = f[ih].poly.LM

        C = list(G)
        D: List[Tuple[int, int]] = []
        while C:
            ig = C.pop(0)
            mg = f[ig].poly.LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                m = monomial_lcm(mh, f[ip].poly.LM)
                return monomial_div(lcm_hg, m) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C)
                and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))

        E = []
        for pair in D:
            mg = f[pair[1]].poly.LM
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.append(pair)

        B_new = []
        for ig1, ig2 in B:
            mg1 = f[ig1].poly.LM
            mg2 = f[ig2].poly.LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.append((ig1, ig2))
        B_new.extend(E)

        G_new = [ig for ig in G if monomial_div(f[ig].poly.LM, mh) is None]
        G_new.append(ih)
        return G_new, B_new

    # -- pairs -------------------------------------------------------------

    def _pair_key(self, pair: Tuple[int, int]) -> Tuple[int, int, int]:
        i, j = sorted(pair)
        lcm = monomial_lcm(self.f[i].poly.LM, self.f[j].poly.LM)
        return (monomial_deg(lcm), i, j)

    def s_polynomial(self, i: int, j: int) -> _Element:
        fi, fj = self.f[i], self.f[j]
        lcm = monomial_lcm(fi.poly.LM, fj.poly.LM)
        mi = monomial_div(lcm, fi.poly.LM)
        mj = monomial_div(lcm, fj.poly.LM)
        one = self.ring.field.one
        ci = one / fi.poly.LC
        cj = one / fj.poly.LC
        poly = fi.poly.mul_term(mi, ci) - fj.poly.mul_term(mj, cj)
        cof = None
        if self.track:
            cof = [
                a.mul_term(mi, ci) - b.mul_term(mj, cj)
                for a, b in zip(fi.cofactors, fj.cofactors)
            ]
        return _Element(poly, cof)

    def reduce(self, element: _Element, divisors: Sequence[int]) -> _Element:
        polys = [self.f[k].poly for k in divisors]
        remainder, quotients = normal_form(element.poly, polys, with_quotients=self.track)
        cof = None
        if self.track:
            cof = _combine(element.cofactors, quotients, [self.f[k] for k in divisors])
        return _Element(remainder, cof)

    # -- main loop ---------------------------------------------------------

    def run(self, generators: Sequence[Poly]) -> Tuple[List[_Element], int]:
        ring = self.ring
        ngens = len(generators)
        F: List[int] = []
        for k, g in enumerate(generators):
            cof = None
            if self.track:
                cof = [ring.one if j == k else ring.zero for j in range(ngens)]
            element = _normalize(_Element(g, cof), final=False)
            if element.poly.is_constant():
                return [_normalize(element, final=True)], 0
            F.append(self._add(element))

        G: List[int] = []
        B: List[Tuple[int, int]] = []
        for ih in sorted(F, key=lambda k: ring.key(self.f[k].poly.LM)):
            G, B = self.update(G, B, ih)

        zero_reductions = 0
        while B:
            pair = min(B, key=self._pair_key)
            B.remove(pair)
            i, j = pair
            if not self.budget.charge():
                raise BudgetExhaustedError(
                    f"S-pair budget of {self.budget.max_reductions} reductions exhausted "
                    f"(basis size {len(G)}, {len(B)} pairs pending)"
                )
            divisors = sorted(G, key=lambda k: ring.key(self.f[k].poly.LM))
            h = self.reduce(self.s_polynomial(i, j), divisors)
            if h.poly.is_zero():
                zero_reductions += 1
                self._emit(f"S({i},{j}) lcm {self._pair_lcm_text(i, j)} -> 0")
                continue
            h = _normalize(h, final=False)
            ih = self._add(h)
            self._emit(f"S({i},{j}) lcm {self._pair_lcm_text(i, j)} -> g{ih} = {h.poly.to_text()}")
            if h.poly.is_constant():
                logger.debug("unit ideal detected after %d reductions", self.budget.reductions)
                return [_normalize(h, final=True)], zero_reductions
            self._check_degree(h.poly)
            G, B = self.update(G, B, ih)

        reduced = []
        for ig in G:
            others = [k for k in G if k != ig]
            r = self.reduce(self.f[ig], others)
            if not r.poly.is_zero():
                reduced.append(_normalize(r, final=True))
        reduced.sort(key=lambda e: ring.key(e.poly.LM), reverse=True)
        return reduced, zero_reductions

    def _pair_lcm_text(self, i: int, j: int) -> str:
        lcm = monomial_lcm(self.f[i].poly.LM, self.f[j].poly.LM)
        return format_monomial(lcm, self.ring.variables) or "1"


def buchberger(
    ideal: IdealPresentation,
    budget: Optional[ComputationBudget] = None,
    trace: Optional[Trace] = None,
    track: bool = False,
) -> GroebnerBasis:
    """
    Compute the reduced Groebner basis of an ideal.

    Args:
        ideal: Generators and ring (the ring's term order is used)
        budget: Shared reduction counter and caps (fresh default if None)
        trace: Called with one line per S-pair reduction
        track: Record cofactors of every basis element

    Returns:
        GroebnerBasis, monic and sorted by decreasing leading monomial

    Raises:
        BudgetExhaustedError: If the reduction budget or degree cap is exceeded
    """
    budget = budget if budget is not None else ComputationBudget()
    ring = ideal.ring
    generators = list(ideal.generators)
    if not generators:
        cof = [] if track else None
        return GroebnerBasis(ring, [], ideal, cof, 0)

    for g in generators:
        if g.degree() > budget.max_degree:
            raise BudgetExhaustedError(
                f"generator of degree {g.degree()} exceeds the degree cap {budget.max_degree}"
            )

    start = budget.reductions
    kernel = _Kernel(ring, budget, trace, track)
    elements, zero_reductions = kernel.run(generators)
    spent = budget.reductions - start
    logger.debug(
        "groebner basis of %d generators in %d variables: %d elements, "
        "%d reductions (%d to zero)",
        len(generators), ring.nvars, len(elements), spent, zero_reductions,
    )
    cofactors = [e.cofactors for e in elements] if track else None
    return GroebnerBasis(ring, [e.poly for e in elements], ideal, cofactors, spent)
