"""
Closure of jet ideals under the automorphisms (and their inverses) and the
delta-derivations of a linear system.
"""

import logging
from typing import Iterable, List, Optional

from ..config import EngineConfig
from ..exceptions import BudgetExhaustedError
from ..groebner.buchberger import Trace
from ..jetring import FilteredElement, JetIdeal, JetRing, delta_apply, sigma_apply
from ..jetring.ideal import ElementLike
from ..linsys import LinearSystem

logger = logging.getLogger(__name__)


def operator_images(element: FilteredElement, system: LinearSystem) -> List[FilteredElement]:
    """sigma(g), sigma^{-1}(g) for every automorphism and delta(g) for every derivation."""
    images = []
    for op_id in system.sigma_ids:
        images.append(sigma_apply(op_id, element, system))
        images.append(sigma_apply(op_id, element, system, inverse=True))
    for op_id in system.delta_ids:
        images.append(delta_apply(op_id, element, system))
    return images


def stability_witness(ideal: JetIdeal, system: LinearSystem) -> Optional[FilteredElement]:
    """
    An operator image of a generator that falls outside the ideal, or None
    when the ideal is stable under every operator.
    """
    for g in ideal.elements():
        for image in operator_images(g, system):
            if not ideal.contains(image):
                return image
    return None


def is_sigma_delta_ideal(ideal: JetIdeal, system: LinearSystem) -> bool:
    return stability_witness(ideal, system) is None


def sigma_delta_close(
    ring: JetRing,
    generators: Iterable[ElementLike],
    system: LinearSystem,
    config: Optional[EngineConfig] = None,
    trace: Optional[Trace] = None,
) -> JetIdeal:
    """
    The smallest det-saturated ideal of S_d containing the generators and
    stable under sigma, sigma^{-1} and delta.

    Each round adds the operator images of the current basis that are not
    yet members and recomputes the saturated basis; the ascending chain
    condition makes the iteration stop.

    Raises:
        BudgetExhaustedError: If the basis has not stabilized after
            ``config.max_closure_rounds`` rounds (the last iterate is
            attached as ``partial``)
    """
    config = config or EngineConfig()
    current = JetIdeal.generate(ring, generators, budget=config.budget(), trace=trace)
    for round_no in range(1, config.max_closure_rounds + 1):
        if current.is_trivial():
            logger.debug("closure at level %d reached the unit ideal in round %d", ring.level, round_no)
            return current
        fresh = []
        for g in current.elements():
            for image in operator_images(g, system):
                if not current.contains(image) and image.poly not in fresh:
                    fresh.append(image.poly)
        if not fresh:
            logger.debug("closure at level %d stable after %d rounds", ring.level, round_no)
            return current
        logger.debug("closure round %d at level %d: %d new generators", round_no, ring.level, len(fresh))
        current = JetIdeal.generate(
            ring, list(current.generators) + fresh, budget=config.budget(), trace=trace
        )
    if current.is_trivial() or is_sigma_delta_ideal(current, system):
        return current
    raise BudgetExhaustedError(
        f"σΔ-closure did not stabilize within {config.max_closure_rounds} rounds",
        partial=current,
    )
