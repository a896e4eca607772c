"""
Prolongation ideals, the closure hypothesis and consistency certificates.

For an ideal a of S_d the prolongation b is the ideal of S_{d+1} generated
by a and ∂(a). When ∂(a ∩ S_{d-1}) ⊂ a and a comes from a prime, b is a
proper ideal; the certificate records the Groebner basis of b (after
det-saturation) and, when b turns out to be the unit ideal, a replayable
derivation of 1 (or of a power of det) from the generators of b.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..config import EngineConfig
from ..exceptions import LevelError
from ..groebner import GroebnerBasis, IdealPresentation, combination, lift
from ..groebner.buchberger import Trace
from ..jetring import JetIdeal, d_apply, jet_ring, total_derivative
from ..polyring import Poly
from ..utils.records import Record

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessStep:
    """
    One line of a derivation.

    A step without a combination is a premise (a generator of the ideal,
    described by ``note``); otherwise ``element`` must equal the sum of
    coefficient * (element of the referenced step).
    """
    label: str
    element: Poly
    combination: Tuple[Tuple[Poly, str], ...] = ()
    note: str = ""

    @property
    def is_premise(self) -> bool:
        return not self.combination

    def describe(self) -> str:
        if self.is_premise:
            return f"{self.label} = {self.element.to_text()}    [{self.note}]"
        parts = []
        for coeff, ref in self.combination:
            if coeff == 1:
                parts.append(ref)
            elif coeff == -1:
                parts.append(f"-{ref}")
            else:
                parts.append(f"({coeff.to_text()})*{ref}")
        text = " + ".join(parts).replace("+ -", "- ")
        suffix = f"    [{self.note}]" if self.note else ""
        return f"{self.label} = {text} = {self.element.to_text()}{suffix}"


@dataclass(frozen=True)
class Witness:
    """A derivation of ``target`` from premises, checkable by exact arithmetic."""
    steps: Tuple[WitnessStep, ...]
    target: Poly

    def replay(self) -> bool:
        """
        Re-evaluate every derived step from the steps it references.

        Returns:
            True iff every combination evaluates to its recorded element and
            the last step equals the target
        """
        known = {}
        for step in self.steps:
            if not step.is_premise:
                value = step.element.ring.zero
                for coeff, ref in step.combination:
                    if ref not in known:
                        return False
                    value = value + coeff * known[ref]
                if value != step.element:
                    return False
            known[step.label] = step.element
        return bool(self.steps) and self.steps[-1].element == self.target

    def to_lines(self) -> List[str]:
        return [step.describe() for step in self.steps]


@dataclass(frozen=True)
class ConsistencyCertificate:
    """Result of :func:`check_consistency`."""
    level: int  # level of a; b lives one level up
    b: IdealPresentation
    basis_of_b: GroebnerBasis
    trivial: bool
    witness: Optional[Witness] = None
    hypothesis_ok: Optional[bool] = None  # ∂(a ∩ S_{d-1}) ⊂ a

    def to_text(self) -> str:
        lines = [f"prolongation of a level-{self.level} ideal"]
        lines.append("b generators: " + (", ".join(g.to_text() for g in self.b.generators) or "0"))
        if self.hypothesis_ok is not None:
            lines.append(f"closure hypothesis: {_yes_no(self.hypothesis_ok)}")
        lines.append(f"basis of b: {self.basis_of_b.to_text()}")
        lines.append(f"trivial: {_yes_no(self.trivial)}")
        if self.witness is not None:
            lines.append("witness:")
            lines.extend("  " + line for line in self.witness.to_lines())
            target = self.witness.target.to_text()
            lines.append(f"  hence {target} ∈ b" + (" (det is a unit)" if target != "1" else ""))
            lines.append(f"  replay: {'ok' if self.witness.replay() else 'FAILED'}")
        return "\n".join(lines) + "\n"

    def to_records(self, prefix: str = "consistency") -> List[Record]:
        records = [
            (f"{prefix}.level", str(self.level)),
            (f"{prefix}.b", ", ".join(g.to_text() for g in self.b.generators) or "0"),
            (f"{prefix}.basis", self.basis_of_b.to_text()),
            (f"{prefix}.trivial", _yes_no(self.trivial)),
        ]
        if self.hypothesis_ok is not None:
            records.append((f"{prefix}.hypothesis_ok", _yes_no(self.hypothesis_ok)))
        if self.witness is not None:
            for k, line in enumerate(self.witness.to_lines()):
                records.append((f"{prefix}.witness.{k}", line))
            records.append((f"{prefix}.witness.replay_ok", _yes_no(self.witness.replay())))
        return records


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _prolongation_terms(a: JetIdeal) -> List[Tuple[str, str, Poly]]:
    """(label, note, polynomial) for g and ∂g, g running over the generators of a."""
    source = a.ring
    target = jet_ring(source.dfield, source.n, source.level + 1)
    terms = []
    for k, g in enumerate(a.generators, start=1):
        terms.append((f"a{k}", f"generator {k} of a", g.change_ring(target.poly_ring)))
        terms.append((f"da{k}", f"∂ of generator {k} of a", total_derivative(g, source, target)))
    return [t for t in terms if not t[2].is_zero()]


def prolongation_ideal(a: JetIdeal) -> IdealPresentation:
    """
    The presentation {g, ∂g : g a generator of a} in the level-(d+1) ring
    (numerators; the generators of a carry no det powers).
    """
    target = jet_ring(a.ring.dfield, a.ring.n, a.level + 1)
    return IdealPresentation(target.poly_ring, [t[2] for t in _prolongation_terms(a)])


def check_closure(a: JetIdeal) -> bool:
    """
    ∂(a'') ⊂ a for a'' = a ∩ S_{d-1}.

    At level 0, a'' = a ∩ K is (0) for a proper ideal and the condition
    holds vacuously.
    """
    if a.level == 0:
        return True
    lower = a.restrict(a.level - 1)
    for g in lower.elements():
        if not a.contains(d_apply(g)):
            logger.debug("closure fails: ∂(%s) not in a", g.to_text())
            return False
    return True


def _premise_steps(b: IdealPresentation, labels: Sequence[str], notes: Sequence[str]) -> List[WitnessStep]:
    return [WitnessStep(label, g, (), note) for label, g, note in zip(labels, b.generators, notes)]


def unit_witness(
    b: IdealPresentation,
    unit: Poly,
    labels: Sequence[str],
    notes: Sequence[str],
    max_power: int,
    config: Optional[EngineConfig] = None,
) -> Optional[Witness]:
    """
    Find unit^m (m = 0, 1, ..., max_power) as an explicit combination of the
    generators of b.

    Returns:
        Witness ending in unit^m, or None if no power up to the bound lies in b
    """
    config = config or EngineConfig()
    R = b.ring
    premises = _premise_steps(b, labels, notes)
    for m in range(max_power + 1):
        target = unit ** m if m else R.one
        cofactors = lift(target, b, budget=config.budget())
        if cofactors is None:
            continue
        combo = tuple((c, label) for c, label in zip(cofactors, labels) if not c.is_zero())
        final = WitnessStep("w", combination(cofactors, b.generators), combo, "combination of generators")
        return Witness(tuple(premises) + (final,), target)
    return None


def check_consistency(
    a: JetIdeal,
    config: Optional[EngineConfig] = None,
    trace: Optional[Trace] = None,
) -> ConsistencyCertificate:
    """
    Build b = prolongation_ideal(a), det-saturate it and report whether it is
    the unit ideal.

    The closure hypothesis is evaluated and recorded; the computation runs
    either way. A trivial b comes with a witness expressing det^m (m at
    most ``config.saturation_power_bound``, m = 0 meaning 1) through the
    generators of b.
    """
    config = config or EngineConfig()
    hypothesis = check_closure(a)
    b = prolongation_ideal(a)
    target = jet_ring(a.ring.dfield, a.ring.n, a.level + 1)
    saturated = JetIdeal.generate(target, b.generators, budget=config.budget(), trace=trace)
    trivial = saturated.is_trivial()
    witness = None
    if trivial:
        terms = _prolongation_terms(a)
        witness = unit_witness(b, target.det, [t[0] for t in terms], [t[1] for t in terms],
                               config.saturation_power_bound, config)
    logger.debug("consistency at level %d: trivial=%s", a.level, trivial)
    return ConsistencyCertificate(
        level=a.level,
        b=b,
        basis_of_b=saturated.basis,
        trivial=trivial,
        witness=witness,
        hypothesis_ok=hypothesis,
    )


def certify_extension(
    q: JetIdeal,
    q_prime: JetIdeal,
    config: Optional[EngineConfig] = None,
) -> bool:
    """
    Check q' ∩ S_d = q and ∂(q) ⊂ q' for ideals q of S_d and q' of S_{d+1}.

    Raises:
        LevelError: If q' is not exactly one level above q
    """
    if q_prime.level != q.level + 1:
        raise LevelError(f"q' must live at level {q.level + 1}, got {q_prime.level}")
    if q_prime.restrict(q.level) != q:
        logger.debug("extension certificate: elimination mismatch")
        return False
    return all(q_prime.contains(d_apply(g)) for g in q.elements())
