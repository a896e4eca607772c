"""
K-points of the jet space and their kernel ideals.

A JetEvaluation sends ∂^k X[i,j] to ∂^k z[i,j] for a matrix z over K with
nonzero determinant. Its kernel in S_d is a prime ideal, saturated with
respect to det(X) and closed under ∂, so it is a consistent input for the
prolongation checks.
"""

from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..basefield import DifferenceDifferentialField, RationalFunction
from ..exceptions import InconsistentEvaluationError, LevelError, SingularMatrixError
from ..groebner import IdealPresentation, buchberger
from ..jetring import FilteredElement, JetIdeal, jet_key, jet_ring
from ..linsys.matrix import Matrix

JetKey = Tuple[int, int, int]  # (row, col, order)


class JetEvaluation:
    """
    An assignment of K-values to the jets of order <= level.

    Args:
        dfield: Field description (its ∂ is used for the consistency check)
        n: Matrix size
        values: (row, col, order) -> value, for every jet up to level
        level: Highest order assigned

    Raises:
        InconsistentEvaluationError: If a value is missing or
            value(i, j, k+1) differs from ∂ value(i, j, k)
        SingularMatrixError: If det of the order-0 values is zero
    """

    def __init__(
        self,
        dfield: DifferenceDifferentialField,
        n: int,
        values: Mapping[JetKey, object],
        level: int,
    ):
        if level < 0:
            raise LevelError("evaluation level must be non-negative")
        K = dfield.field
        self.dfield = dfield
        self.n = n
        self.level = level
        self.values: Dict[JetKey, RationalFunction] = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(level + 1):
                    if (i, j, k) not in values:
                        raise InconsistentEvaluationError(f"no value for jet ({i},{j}) of order {k}")
                    self.values[(i, j, k)] = K.convert(values[(i, j, k)])
                for k in range(level):
                    expected = dfield.partial_apply(self.values[(i, j, k)])
                    if expected != self.values[(i, j, k + 1)]:
                        raise InconsistentEvaluationError(
                            f"value of order {k + 1} at ({i},{j}) is {self.values[(i, j, k + 1)]}, "
                            f"but ∂ of the order-{k} value is {expected}"
                        )
        if not self.order0_matrix().det():
            raise SingularMatrixError("det(X) vanishes at the evaluation point")

    @classmethod
    def from_matrix(
        cls,
        dfield: DifferenceDifferentialField,
        rows: Sequence[Sequence],
        level: int,
    ) -> "JetEvaluation":
        """The evaluation at the jets of the matrix ``rows`` over K."""
        n = len(rows)
        values = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError("evaluation matrix must be square")
            for j, entry in enumerate(row, start=1):
                value = dfield.field.convert(entry)
                for k in range(level + 1):
                    values[(i, j, k)] = value
                    value = dfield.partial_apply(value)
        return cls(dfield, n, values, level)

    def order0_matrix(self) -> Matrix:
        K = self.dfield.field
        return Matrix(
            [[self.values[(i, j, 0)] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)],
            K.zero,
            K.one,
        )

    def value(self, row: int, col: int, order: int) -> RationalFunction:
        try:
            return self.values[(row, col, order)]
        except KeyError:
            raise LevelError(f"evaluation has no value for order {order}") from None

    def extended(self, level: int) -> "JetEvaluation":
        """The same point with jets up to a higher order."""
        return JetEvaluation.from_matrix(
            self.dfield,
            [[self.values[(i, j, 0)] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)],
            level,
        )

    def evaluate(self, element) -> RationalFunction:
        """
        Value of a jet polynomial or element (all occurring jets must be
        assigned).
        """
        if isinstance(element, FilteredElement):
            poly, det_power = element.poly, element.det_power
        else:
            poly, det_power = element, 0
        point = {}
        for name in poly.support():
            row, col, order = jet_key(name)
            point[name] = self.value(row, col, order)
        value = poly.evaluate(point)
        if det_power:
            value = value / self.order0_matrix().det() ** det_power
        return value

    def annihilates(self, element) -> bool:
        return self.evaluate(element).is_zero()


def evaluation_kernel(ev: JetEvaluation, level: Optional[int] = None) -> JetIdeal:
    """
    The kernel of the evaluation in S_level: (∂^k X[i,j] - value(i,j,k)).

    The kernel of a point with det(X) != 0 is already det-saturated, so its
    reduced basis is computed directly.

    Raises:
        LevelError: If level exceeds the evaluation's level
    """
    level = ev.level if level is None else level
    if level > ev.level:
        raise LevelError(f"evaluation defined up to order {ev.level}, kernel requested at {level}")
    ring = jet_ring(ev.dfield, ev.n, level)
    R = ring.poly_ring
    gens = [
        ring.var(v.row, v.col, v.order) - R.constant(ev.value(v.row, v.col, v.order))
        for v in ring.jet_vars
    ]
    return JetIdeal(ring, buchberger(IdealPresentation(R, gens)))
