"""
The difference-differential linear system and its integrability conditions.

    sigma_i(Y) = A_i Y    (A_i invertible over K)
    delta_j(Y) = B_j Y

The conditions that make all operators commute on a fundamental matrix Z
are obtained by expanding mu(tau(Z)) = tau(mu(Z)):

    SS  sigma_i(A_j) A_i = sigma_j(A_i) A_j
    SD  sigma_i(B_j) A_i = delta_j(A_i) + A_i B_j
    DD  delta_i(B_j) + B_j B_i = delta_j(B_i) + B_i B_j
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Mapping, Optional, Tuple

from ..basefield import DifferenceDifferentialField
from ..config import DEFAULT_MAX_LEVEL
from ..exceptions import FieldPresentationError, SingularMatrixError, UnknownOperatorError
from .matrix import Matrix

logger = logging.getLogger(__name__)

SS = "SS"
SD = "SD"
DD = "DD"


@dataclass(frozen=True)
class IntegrabilityCheck:
    """
    One condition for one ordered operator pair.

    For SD the residual is delta_j(A_i) + A_i B_j - sigma_i(B_j) A_i; SS and
    DD subtract their left sides the same way.
    """
    condition: str  # SS, SD or DD
    first: str
    second: str
    passed: bool
    residual: Matrix  # right side minus left side

    def describe(self) -> str:
        verdict = "pass" if self.passed else "fail"
        text = f"{self.condition}({self.first}, {self.second}): {verdict}"
        if not self.passed:
            text += f", residual {self.residual}"
        return text


@dataclass(frozen=True)
class IntegrabilityReport:
    """Result of :meth:`LinearSystem.check_integrability`."""
    checks: Tuple[IntegrabilityCheck, ...]
    # SS pairs satisfying sigma_i(A_j) = sigma_j(A_i) A_j but failing SS
    displayed_form_only: Tuple[Tuple[str, str], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> Tuple[IntegrabilityCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


class LinearSystem:
    """
    Matrices A_i for the automorphisms and B_j for the delta-derivations
    of a difference-differential field.

    Args:
        field: Field description; its Sigma and Delta index the matrices
        n: Matrix size
        A: sigma id -> n x n matrix over K (invertible)
        B: delta id -> n x n matrix over K
        max_level: Highest jet order the system is prepared for; the
            parameter derivatives of every matrix are precomputed up to
            max_level + 1

    Raises:
        FieldPresentationError: If the index sets do not match the field or
            a matrix has the wrong shape
        SingularMatrixError: If some A_i is not invertible
    """

    def __init__(
        self,
        field: DifferenceDifferentialField,
        n: int,
        A: Optional[Mapping[str, Matrix]] = None,
        B: Optional[Mapping[str, Matrix]] = None,
        max_level: int = DEFAULT_MAX_LEVEL,
    ):
        if n < 1:
            raise FieldPresentationError("system size n must be at least 1")
        self.field = field
        self.n = n
        self.max_level = max_level
        K = field.field
        A = dict(A or {})
        B = dict(B or {})

        sigma_ids = {s.id for s in field.sigmas}
        delta_ids = {d.id for d in field.deltas}
        if set(A) != sigma_ids:
            raise FieldPresentationError(
                f"A matrices given for {sorted(A)}, automorphisms are {sorted(sigma_ids)}"
            )
        if set(B) != delta_ids:
            raise FieldPresentationError(
                f"B matrices given for {sorted(B)}, derivations are {sorted(delta_ids)}"
            )
        for op_id, M in list(A.items()) + list(B.items()):
            if M.shape != (n, n):
                raise FieldPresentationError(
                    f"matrix for {op_id!r} has shape {M.shape}, expected ({n}, {n})"
                )

        self.A: Dict[str, Matrix] = {k: Matrix.over(K, A[k].rows) for k in sorted(A)}
        self.B: Dict[str, Matrix] = {k: Matrix.over(K, B[k].rows) for k in sorted(B)}
        self.A_inv: Dict[str, Matrix] = {}
        for op_id, M in self.A.items():
            try:
                self.A_inv[op_id] = M.inverse()
            except SingularMatrixError:
                raise SingularMatrixError(f"A must be invertible (A for {op_id!r} is singular)") from None

        # sigma^{-1}(X) = sigma^{-1}(A^{-1}) X
        self.A_tilde: Dict[str, Matrix] = {
            op_id: M.apply(lambda e, s=field.operator(op_id): field.apply_inverse(s, e))
            for op_id, M in self.A_inv.items()
        }

        # jet ring, op id, inverse -> images of the jet variables
        self.jet_image_cache: Dict[tuple, dict] = {}
        self._derived: Dict[Tuple[str, bool, int], Matrix] = {}
        for op_id in self.A:
            self._precompute(op_id, False, self.A[op_id])
            self._precompute(op_id, True, self.A_tilde[op_id])
        for op_id in self.B:
            self._precompute(op_id, False, self.B[op_id])

    def _precompute(self, op_id: str, inverse: bool, M: Matrix) -> None:
        current = M
        self._derived[(op_id, inverse, 0)] = current
        for level in range(1, self.max_level + 2):
            current = current.apply(self.field.partial_apply)
            self._derived[(op_id, inverse, level)] = current

    # -- lookup ------------------------------------------------------------

    @property
    def sigma_ids(self) -> Tuple[str, ...]:
        return tuple(self.A)

    @property
    def delta_ids(self) -> Tuple[str, ...]:
        return tuple(self.B)

    def matrix(self, op_id: str) -> Matrix:
        """
        The matrix of an operator (A_i or B_j).

        Raises:
            UnknownOperatorError: If op_id is neither a sigma nor a delta
        """
        if op_id in self.A:
            return self.A[op_id]
        if op_id in self.B:
            return self.B[op_id]
        raise UnknownOperatorError(f"no matrix for operator {op_id!r}")

    def derived_matrix(self, op_id: str, level: int, inverse: bool = False) -> Matrix:
        """
        The parameter derivative ∂^level applied entrywise to the operator's
        matrix (to sigma^{-1}(A^{-1}) when inverse is set).
        """
        self.matrix(op_id)
        if inverse and op_id not in self.A:
            raise UnknownOperatorError(f"operator {op_id!r} is not an automorphism")
        key = (op_id, inverse, level)
        if key in self._derived:
            return self._derived[key]
        current = self._derived[(op_id, inverse, self.max_level + 1)]
        for _ in range(level - self.max_level - 1):
            current = current.apply(self.field.partial_apply)
        return current

    # -- integrability -------------------------------------------------------

    def _apply(self, op_id: str, M: Matrix) -> Matrix:
        return M.apply(lambda e: self.field.apply(op_id, e))

    def check_integrability(self) -> IntegrabilityReport:
        """
        Check SS for every pair of automorphisms, SD for every
        (automorphism, derivation) pair and DD for every pair of derivations.

        Returns:
            IntegrabilityReport with one entry per condition and pair
        """
        checks = []
        displayed_only = []
        for si, sj in combinations(self.sigma_ids, 2):
            Ai, Aj = self.A[si], self.A[sj]
            left = self._apply(si, Aj) * Ai
            right = self._apply(sj, Ai) * Aj
            residual = right - left
            checks.append(IntegrabilityCheck(SS, si, sj, residual.is_zero(), residual))
            if not residual.is_zero() and self._apply(si, Aj) == right:
                displayed_only.append((si, sj))
        for si in self.sigma_ids:
            for dj in self.delta_ids:
                Ai, Bj = self.A[si], self.B[dj]
                left = self._apply(si, Bj) * Ai
                right = self._apply(dj, Ai) + Ai * Bj
                residual = right - left
                checks.append(IntegrabilityCheck(SD, si, dj, residual.is_zero(), residual))
        for di, dj in combinations(self.delta_ids, 2):
            Bi, Bj = self.B[di], self.B[dj]
            left = self._apply(di, Bj) + Bj * Bi
            right = self._apply(dj, Bi) + Bi * Bj
            residual = right - left
            checks.append(IntegrabilityCheck(DD, di, dj, residual.is_zero(), residual))
        report = IntegrabilityReport(tuple(checks), tuple(displayed_only))
        logger.debug("integrability: %d checks, %d failures", len(checks), len(report.failures))
        return report

    def __repr__(self) -> str:
        ops = ", ".join(list(self.sigma_ids) + list(self.delta_ids))
        return f"LinearSystem(n={self.n}, operators=[{ops}])"
