"""
Bounded search for ΣΔ-constants in a finite-dimensional quotient S_d / m.

A candidate residue class is written over the staircase basis,

    r = sum_q sum_s (p_{q,s} / q) * s

with q running over the denominator candidates, s over the staircase
monomials and each p_{q,s} a ℚ-polynomial of degree at most the bound in the
base variables. The conditions sigma(r) - r ∈ m and delta(r) ∈ m are
ℚ-linear in the coefficients of the p_{q,s}; the solutions are a nullspace.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix as SympyMatrix
from sympy.polys.domains import QQ

from ..basefield import RationalFunction
from ..basefield.field import lcm_denominator
from ..config import EngineConfig
from ..exceptions import NotProperIdealError, StabilityError
from ..jetring import FilteredElement, JetIdeal, delta_apply, sigma_apply
from ..linsys import LinearSystem
from ..polyring import Monomial, Poly
from ..utils.records import Record
from .closure import stability_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstantsReport:
    """
    Result of :func:`find_constants`.

    Attributes:
        level: Level of the quotient
        degree_bound: Degree bound of the coefficient ansatz
        denominators: Denominator candidates used
        staircase: Residue basis of S_d / m
        solutions: Spanning set of the constants found (normal forms)
        outside_base: Solutions that are not classes of elements of K
    """
    level: int
    degree_bound: int
    denominators: Tuple[RationalFunction, ...]
    staircase: Tuple[Poly, ...]
    solutions: Tuple[Poly, ...]
    outside_base: Tuple[Poly, ...]

    @property
    def new_constants(self) -> bool:
        return bool(self.outside_base)

    def to_text(self) -> str:
        lines = [f"constants search at level {self.level}, degree bound {self.degree_bound}"]
        lines.append("denominators: " + ", ".join(q.to_text() for q in self.denominators))
        lines.append("staircase: " + ", ".join(s.to_text() for s in self.staircase))
        lines.append(f"solutions: {len(self.solutions)}")
        lines.extend(f"  {sol.to_text()}" for sol in self.solutions)
        lines.append(f"outside K: {len(self.outside_base)}")
        lines.extend(f"  {sol.to_text()}" for sol in self.outside_base)
        lines.append("complete only up to the degree bound")
        return "\n".join(lines) + "\n"

    def to_records(self) -> List[Record]:
        records: List[Record] = [
            ("constants.level", str(self.level)),
            ("constants.degree_bound", str(self.degree_bound)),
            ("constants.denominators", ", ".join(q.to_text() for q in self.denominators)),
            ("constants.staircase", ", ".join(s.to_text() for s in self.staircase)),
            ("constants.count", str(len(self.solutions))),
        ]
        for k, sol in enumerate(self.solutions):
            records.append((f"constants.solution.{k}", sol.to_text()))
        records.append(("constants.outside_base", str(len(self.outside_base))))
        return records


def _base_monomials(field, degree_bound: int) -> List[RationalFunction]:
    """All monomials of total degree <= degree_bound in the base variables."""
    gens = field.gens
    result = []
    for exps in product(range(degree_bound + 1), repeat=len(gens)):
        if sum(exps) > degree_bound:
            continue
        term = field.one
        for g, e in zip(gens, exps):
            if e:
                term = term * g ** e
        result.append(term)
    return result


def _residues(element: FilteredElement, m: JetIdeal, system: LinearSystem) -> List[Tuple[str, Poly]]:
    """Normal forms of sigma(e) - e and delta(e), tagged by operator id."""
    residues = []
    for op_id in system.sigma_ids:
        residues.append((op_id, m.reduce(sigma_apply(op_id, element, system) - element)))
    for op_id in system.delta_ids:
        residues.append((op_id, m.reduce(delta_apply(op_id, element, system))))
    return residues


def find_constants(
    m: JetIdeal,
    system: LinearSystem,
    degree_bound: Optional[int] = None,
    denominators: Optional[Sequence[object]] = None,
    config: Optional[EngineConfig] = None,
) -> ConstantsReport:
    """
    Search the residue classes of S_d / m fixed by every automorphism and
    annihilated by every delta-derivation.

    Args:
        m: A proper ΣΔ-ideal with a finite staircase
        system: The linear system
        degree_bound: Degree of the coefficient ansatz (default from config)
        denominators: Denominator candidates (field elements or text, default 1)
        config: Engine configuration

    Returns:
        ConstantsReport; complete only up to the bound

    Raises:
        NotProperIdealError: If m is the unit ideal
        StabilityError: If m is not stable under the operators
        UnsupportedQuotientError: If S_d / m is infinite-dimensional over K
    """
    config = config or EngineConfig()
    if degree_bound is None:
        degree_bound = config.constants_degree_bound
    if degree_bound < 0:
        raise ValueError(f"degree_bound must be non-negative, got {degree_bound}")
    if m.is_trivial():
        raise NotProperIdealError("the constants search needs a proper ideal")
    witness = stability_witness(m, system)
    if witness is not None:
        raise StabilityError(f"the ideal is not a ΣΔ-ideal: {witness.to_text()} is not a member", witness)

    field = m.ring.field
    R = m.ring.poly_ring
    staircase: Tuple[Monomial, ...] = m.basis.standard_monomials()
    denoms = tuple(field.convert(q) for q in (denominators or [field.one]))
    for q in denoms:
        if q.is_zero():
            raise ValueError("zero denominator candidate")
    coefficient_terms = _base_monomials(field, degree_bound)

    unknowns: List[Poly] = []
    for q in denoms:
        for s in staircase:
            for c in coefficient_terms:
                unknowns.append(R.monomial(s, c / q))
    logger.debug("constants ansatz: %d unknowns over a staircase of %d", len(unknowns), len(staircase))

    # (operator, jet monomial) -> {unknown index: coefficient in K}
    columns: Dict[Tuple[str, Monomial], Dict[int, RationalFunction]] = {}
    for j, u in enumerate(unknowns):
        for op_id, residue in _residues(m.ring.element(u), m, system):
            for mono, coeff in residue.terms:
                columns.setdefault((op_id, mono), {})[j] = coeff

    rows: List[List] = []
    for entries in columns.values():
        common = field.from_polys(lcm_denominator(entries.values()), field.poly_ring.one)
        by_base: Dict[tuple, Dict[int, object]] = {}
        for j, coeff in entries.items():
            cleared = (coeff * common).num
            for base_mono, q_coeff in cleared.terms():
                by_base.setdefault(base_mono, {})[j] = q_coeff
        for base_mono in sorted(by_base):
            row = [0] * len(unknowns)
            for j, q_coeff in by_base[base_mono].items():
                row[j] = QQ.to_sympy(q_coeff)
            rows.append(row)

    if rows:
        kernel = SympyMatrix(rows).nullspace()
    else:
        kernel = [SympyMatrix([1 if k == j else 0 for k in range(len(unknowns))]) for j in range(len(unknowns))]

    solutions = []
    for vec in kernel:
        sol = R.zero
        for j, value in enumerate(vec):
            if value != 0:
                sol = sol + unknowns[j].scale(field.from_rational(int(value.p), int(value.q)))
        sol = m.reduce(sol)
        if not sol.is_zero():
            solutions.append(sol)
    outside = tuple(sol for sol in solutions if not sol.is_constant())
    logger.debug("constants search: %d solutions, %d outside K", len(solutions), len(outside))
    return ConstantsReport(
        level=m.level,
        degree_bound=degree_bound,
        denominators=denoms,
        staircase=tuple(R.monomial(s) for s in staircase),
        solutions=tuple(solutions),
        outside_base=outside,
    )
