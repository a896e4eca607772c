"""
The ascending chain of ΣΔ-ideals m_0 ⊂ m_1 ⊂ ... with m_d ⊂ S_d.

Each step prolongs m_d to S_{d+1}, closes the result under the operators,
adds the seed relations supplied for the new level and checks everything
the construction relies on:

    elimination        m_{d+1} ∩ S_d = m_d (both inclusions)
    partial            ∂(m_d) ⊂ m_{d+1}
    saturation         m_{d+1} is det-saturated
    σΔ-closed          m_{d+1} is stable under every operator
    consistency        m_{d+1} is proper

Maximality is decided only for finite-dimensional quotients.
"""

import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Sequence, Tuple

from ..config import EngineConfig
from ..exceptions import LevelError, UnsupportedQuotientError
from ..groebner import radical_member
from ..groebner.buchberger import Trace
from ..jetring import JetIdeal, d_apply, jet_ring
from ..jetring.ideal import ElementLike, ring_numerator
from ..linsys import LinearSystem
from ..utils.records import Record
from .closure import is_sigma_delta_ideal, sigma_delta_close
from .consistency import prolongation_ideal

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
NOT_ATTEMPTED = "not-attempted"
REFUTED = "refuted"


@dataclass(frozen=True)
class LevelReport:
    """Checks recorded for one level of the chain (None: not applicable)."""
    level: int
    ideal: JetIdeal
    elimination_ok: Optional[bool]
    partial_ok: Optional[bool]
    saturation_ok: bool
    sigma_delta_closed_ok: bool
    consistency_ok: bool
    maximality_status: str
    seeds_in_radical: Tuple[bool, ...] = ()
    conflict: Optional[str] = None  # element of m_{d+1} ∩ S_d outside m_d

    @property
    def passed(self) -> bool:
        checks = [
            self.elimination_ok,
            self.partial_ok,
            self.saturation_ok,
            self.sigma_delta_closed_ok,
            self.consistency_ok,
        ]
        return all(c is not False for c in checks) and self.maximality_status != REFUTED

    def check_items(self) -> List[Tuple[str, str]]:
        items = [
            ("elimination_ok", _verdict(self.elimination_ok)),
            ("partial_ok", _verdict(self.partial_ok)),
            ("saturation_ok", _verdict(self.saturation_ok)),
            ("sigma_delta_closed_ok", _verdict(self.sigma_delta_closed_ok)),
            ("consistency_ok", _verdict(self.consistency_ok)),
            ("maximality_status", self.maximality_status),
        ]
        if self.seeds_in_radical:
            items.append(("seeds_in_radical", ", ".join(_verdict(s) for s in self.seeds_in_radical)))
        if self.conflict is not None:
            items.append(("conflict", self.conflict))
        return items


def _verdict(flag: Optional[bool]) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


@dataclass(frozen=True)
class ChainReport:
    """The levels built so far and the reason the construction stopped, if any."""
    depth: int
    levels: Tuple[LevelReport, ...]
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None and all(level.passed for level in self.levels)

    def ideal(self, level: int) -> JetIdeal:
        return self.levels[level].ideal

    def to_text(self) -> str:
        lines = [f"chain depth {self.depth}"]
        for lvl in self.levels:
            lines.append(f"level {lvl.level}")
            lines.append(f"  basis: {lvl.ideal.to_text()}")
            for key, value in lvl.check_items():
                lines.append(f"  {key}: {value}")
        if self.failure is not None:
            lines.append(f"failure: {self.failure}")
        lines.append(f"result: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> List[Record]:
        records: List[Record] = [("chain.depth", str(self.depth))]
        for lvl in self.levels:
            prefix = f"level.{lvl.level}"
            records.append((f"{prefix}.basis", lvl.ideal.to_text()))
            for key, value in lvl.check_items():
                records.append((f"{prefix}.{key}", value))
        if self.failure is not None:
            records.append(("chain.failure", self.failure))
        records.append(("chain.passed", "yes" if self.passed else "no"))
        return records


def maximality_status(
    ideal: JetIdeal,
    system: LinearSystem,
    config: Optional[EngineConfig] = None,
) -> str:
    """
    Decide ΣΔ-simplicity of S_d / ideal when the quotient is finite-dimensional.

    Every nonzero staircase monomial s is tested first: the closure of
    ideal + (s) must be the unit ideal. A proper closure is a ΣΔ-ideal
    strictly between the ideal and (1), which refutes maximality. Passing
    this test does not prove simplicity by itself (a product of two
    stable maximal ideals passes it), so maximality is certified only when
    the quotient is K, where the ideal is maximal outright.

    Returns:
        ``certified``, ``refuted`` or ``not-attempted``
    """
    if ideal.is_trivial():
        return NOT_ATTEMPTED
    try:
        staircase = ideal.basis.standard_monomials()
    except UnsupportedQuotientError:
        return NOT_ATTEMPTED
    R = ideal.ring.poly_ring
    for m in staircase:
        if not any(m):
            continue
        closed = sigma_delta_close(ideal.ring, list(ideal.generators) + [R.monomial(m)], system, config)
        if not closed.is_trivial():
            logger.debug("maximality refuted by staircase monomial %s", R.monomial(m))
            return REFUTED
    if len(staircase) == 1:
        return CERTIFIED
    logger.debug("quotient of dimension %d passes the staircase test, not certified", len(staircase))
    return NOT_ATTEMPTED


def _level_report(
    level: int,
    ideal: JetIdeal,
    previous: Optional[JetIdeal],
    system: LinearSystem,
    config: EngineConfig,
    seeds_in_radical: Tuple[bool, ...] = (),
) -> LevelReport:
    consistency_ok = not ideal.is_trivial()
    elimination_ok = partial_ok = None
    conflict = None
    if previous is not None:
        restricted = ideal.restrict(previous.level)
        missing = [g for g in restricted.generators if not previous.contains(g)]
        elimination_ok = not missing and restricted.contains_ideal(previous)
        if missing:
            conflict = missing[0].to_text()
        partial_ok = all(ideal.contains(d_apply(g)) for g in previous.elements())
    if consistency_ok:
        saturation_ok = ideal.is_saturated(config.budget())
        closed_ok = is_sigma_delta_ideal(ideal, system)
        status = maximality_status(ideal, system, config)
    else:
        saturation_ok = True
        closed_ok = True
        status = NOT_ATTEMPTED
    return LevelReport(
        level=level,
        ideal=ideal,
        elimination_ok=elimination_ok,
        partial_ok=partial_ok,
        saturation_ok=saturation_ok,
        sigma_delta_closed_ok=closed_ok,
        consistency_ok=consistency_ok,
        maximality_status=status,
        seeds_in_radical=seeds_in_radical,
        conflict=conflict,
    )


def build_chain(
    system: LinearSystem,
    seeds: Optional[Mapping[int, Sequence[ElementLike]]] = None,
    depth: int = 1,
    config: Optional[EngineConfig] = None,
    trace: Optional[Trace] = None,
) -> ChainReport:
    """
    Construct and check m_0, ..., m_depth.

    m_0 is the closure of the level-0 seeds (of (0) without seeds). For
    d < depth, m_{d+1} is the closure of the prolongation of m_d, extended by
    the level-(d+1) seeds and closed again.

    Args:
        system: The linear system (assumed integrable)
        seeds: level -> seed relations (jet elements, polynomials or text)
        depth: Highest level D
        config: Budgets and bounds; depth must not exceed config.max_level

    Returns:
        ChainReport; a failed step (unit ideal, or a seed relation that
        changes a lower level) ends the chain with a recorded failure

    Raises:
        LevelError: If depth is negative or above config.max_level
        BudgetExhaustedError: If a Groebner computation exceeds its budget
    """
    config = config or EngineConfig()
    seeds = dict(seeds or {})
    if depth < 0 or depth > config.max_level:
        raise LevelError(f"depth must be between 0 and {config.max_level}, got {depth}")
    for level in seeds:
        if level < 0 or level > depth:
            raise LevelError(f"seed level {level} outside 0..{depth}")
    dfield = system.field
    n = system.n

    ring0 = jet_ring(dfield, n, 0)
    seeded0 = sigma_delta_close(ring0, seeds.get(0, []), system, config, trace)
    radical0 = _seed_radicality(ring0, seeds.get(0, []), JetIdeal.zero(ring0), config)
    levels = [_level_report(0, seeded0, None, system, config, radical0)]
    if seeded0.is_trivial():
        return ChainReport(depth, tuple(levels), "level 0: the seed relations generate the unit ideal")

    current = seeded0
    for d in range(depth):
        ring = jet_ring(dfield, n, d + 1)
        logger.debug("chain step %d -> %d", d, d + 1)
        b = prolongation_ideal(current)
        unseeded = sigma_delta_close(ring, b.generators, system, config, trace)
        if unseeded.is_trivial():
            levels.append(_level_report(d + 1, unseeded, current, system, config))
            return ChainReport(depth, tuple(levels), f"level {d + 1}: the prolongation of m_{d} is the unit ideal")
        level_seeds = seeds.get(d + 1, [])
        radical = ()
        nxt = unseeded
        if level_seeds:
            radical = _seed_radicality(ring, level_seeds, unseeded, config)
            nxt = sigma_delta_close(ring, list(unseeded.generators) + list(level_seeds), system, config, trace)
        report = _level_report(d + 1, nxt, current, system, config, radical)
        levels.append(report)
        if not report.consistency_ok:
            return ChainReport(depth, tuple(levels), f"level {d + 1}: the seed relations generate the unit ideal")
        if not report.elimination_ok:
            return ChainReport(
                depth,
                tuple(levels),
                f"level {d + 1}: seed relations change m_{d} (conflict witness {report.conflict})",
            )
        current = nxt
    return ChainReport(depth, tuple(levels))


def _seed_radicality(ring, level_seeds, unseeded: JetIdeal, config: EngineConfig) -> Tuple[bool, ...]:
    """For each seed: does it already lie in the radical of the unseeded ideal?"""
    return tuple(
        radical_member(ring_numerator(ring, s), unseeded.basis, budget=config.budget())
        for s in level_seeds
    )
