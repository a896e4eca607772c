"""
Verification of fundamental solution matrices in jet-ring quotients.
"""

import logging
from typing import Optional, Sequence

from ..config import ComputationBudget
from ..exceptions import NonInvertibleDeterminantError
from ..jetring import FilteredElement, JetIdeal, delta_apply, leibniz_det, ring_numerator, sigma_apply
from .matrix import Matrix
from .system import LinearSystem

logger = logging.getLogger(__name__)


def _as_matrix(Z, ideal: JetIdeal) -> Matrix:
    ring = ideal.ring
    rows = Z.rows if isinstance(Z, Matrix) else Z
    entries = [
        [e if isinstance(e, FilteredElement) else ring.element(ring_numerator(ring, e)) for e in row]
        for row in rows
    ]
    return Matrix(entries, ring.zero, ring.one)


def verify_fundamental_matrix(
    Z,
    ideal: JetIdeal,
    system: LinearSystem,
    budget: Optional[ComputationBudget] = None,
) -> bool:
    """
    Check that Z is a fundamental matrix of the system in S_d / ideal.

    The entries of Z are first replaced by their normal forms modulo the
    ideal; then sigma(Z) - A Z and delta(Z) - B Z must vanish modulo the
    ideal for every operator of the system.

    Args:
        Z: n x n matrix (Matrix or nested rows) of jet elements or jet text
        ideal: det-saturated ideal of S_d
        system: The linear system

    Returns:
        True iff every entry of every residual lies in the ideal

    Raises:
        NonInvertibleDeterminantError: If det(Z) is not a unit modulo the ideal
    """
    ring = ideal.ring
    Zm = _as_matrix(Z, ideal)
    if Zm.shape != (system.n, system.n):
        raise ValueError(f"Z has shape {Zm.shape}, the system has n={system.n}")

    det_z = leibniz_det(Zm.rows, ring.zero, ring.one)
    with_det = JetIdeal.generate(ring, list(ideal.generators) + [det_z.poly], budget=budget)
    if not with_det.is_trivial():
        raise NonInvertibleDeterminantError(
            f"det(Z) = {det_z.to_text()} is not invertible modulo the ideal"
        )

    reduced = Zm.apply(lambda e: FilteredElement(ring, ideal.reduce(e), e.det_power))

    def lift(M: Matrix) -> Matrix:
        return M.map_entries(lambda c: ring.constant(c), ring.zero, ring.one)

    for op_id in system.sigma_ids:
        image = reduced.apply(lambda e: sigma_apply(op_id, e, system))
        residual = image - lift(system.A[op_id]) * reduced
        if not all(ideal.contains(e) for e in residual.entries()):
            logger.debug("fundamental matrix fails under %s", op_id)
            return False
    for op_id in system.delta_ids:
        image = reduced.apply(lambda e: delta_apply(op_id, e, system))
        residual = image - lift(system.B[op_id]) * reduced
        if not all(ideal.contains(e) for e in residual.entries()):
            logger.debug("fundamental matrix fails under %s", op_id)
            return False
    return True
