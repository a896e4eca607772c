"""
Small dense matrices with exact entries.

Entries are any exact ring elements supporting ``+ - *`` (and ``/`` where
inverses are taken): RationalFunctions of the base field, or polynomials
of a jet ring.
"""

from typing import Callable, List, Optional, Sequence

from ..exceptions import SingularMatrixError


class Matrix:
    """
    An immutable rows x cols matrix.

    Args:
        rows: Row lists of entries
        zero: The zero of the entry ring (needed for empty or new matrices)
        one: The one of the entry ring
    """

    __slots__ = ("rows", "nrows", "ncols", "zero", "one")

    def __init__(self, rows: Sequence[Sequence], zero, one):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix rows")
        self.zero = zero
        self.one = one

    @classmethod
    def identity(cls, n: int, zero, one) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], zero, one)

    @classmethod
    def zeros(cls, n: int, m: int, zero, one) -> "Matrix":
        return cls([[zero] * m for _ in range(n)], zero, one)

    @classmethod
    def over(cls, field, rows: Sequence[Sequence]) -> "Matrix":
        """Build a matrix over a field, converting every entry."""
        return cls([[field.convert(e) for e in r] for r in rows], field.zero, field.one)

    # -- access ------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def is_zero(self) -> bool:
        return all(not e for e in self.entries())

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.nrows, self.zero, self.one)

    # -- arithmetic ----------------------------------------------------------

    def _new(self, rows) -> "Matrix":
        return Matrix(rows, self.zero, self.one)

    def _check_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return self._new([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return self._new([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self._new([[-a for a in r] for r in self.rows])

    def __mul__(self, other) -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                total = self.zero
                for k, a in enumerate(r):
                    if a:
                        b = other.rows[k][j]
                        if b:
                            total = total + a * b
                row.append(total)
            rows.append(row)
        return self._new(rows)

    def scale(self, c) -> "Matrix":
        return self._new([[c * a for a in r] for r in self.rows])

    __rmul__ = scale

    def apply(self, fn: Callable) -> "Matrix":
        """Apply fn to every entry (an operator acting entrywise)."""
        return self._new([[fn(a) for a in r] for r in self.rows])

    def map_entries(self, fn: Callable, zero, one) -> "Matrix":
        """Entrywise map into another entry ring."""
        return Matrix([[fn(a) for a in r] for r in self.rows], zero, one)

    def transpose(self) -> "Matrix":
        return self._new([list(c) for c in zip(*self.rows)])

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        total = self.zero
        for i in range(self.nrows):
            total = total + self.rows[i][i]
        return total

    # -- determinants and inverses -----------------------------------------

    def det(self):
        """
        Determinant by fraction-free Bareiss elimination.

        Entries must form a field (divisions by previous pivots are exact
        but go through ``/``).
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self.one
        M = [list(r) for r in self.rows]
        sign = 1
        prev = self.one
        for k in range(n - 1):
            if not M[k][k]:
                for i in range(k + 1, n):
                    if M[i][k]:
                        M[i], M[k] = M[k], M[i]
                        sign = -sign
                        break
                else:
                    return self.zero
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev
            prev = M[k][k]
        det = M[n - 1][n - 1]
        return det if sign > 0 else -det

    def inverse(self) -> "Matrix":
        """
        Inverse by fraction-free Gauss-Jordan elimination on [M | I].

        Raises:
            SingularMatrixError: If the matrix is singular
        """
        if not self.is_square():
            raise SingularMatrixError("only square matrices can be inverted")
        n = self.nrows
        aug = [list(r) + [self.one if i == j else self.zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        prev = self.one
        for k in range(n):
            pivot_row = next((i for i in range(k, n) if aug[i][k]), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != k:
                aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
            pivot = aug[k][k]
            for i in range(n):
                if i == k:
                    continue
                factor = aug[i][k]
                aug[i] = [(pivot * a - factor * b) / prev for a, b in zip(aug[i], aug[k])]
            prev = pivot
        return self._new([[a / prev for a in row[n:]] for row in aug])

    def is_invertible(self) -> bool:
        return self.is_square() and bool(self.det())

    # -- comparison and printing ---------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_text(self, describe: Optional[Callable] = None) -> str:
        """Bracketed rows, ``[[a, b], [c, d]]``."""
        show = describe or str
        return "[" + ", ".join("[" + ", ".join(show(e) for e in r) + "]" for r in self.rows) + "]"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Matrix({self.to_text()})"


def split_entries(text: str) -> List[str]:
    """Split on commas that are not inside parentheses or brackets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_matrix(field, text: str) -> Matrix:
    """
    Parse ``[[a, b], [c, d]]`` with entries in the field's text syntax.

    Raises:
        ValueError: On malformed brackets or ragged rows
        ExpressionSyntaxError: On a malformed entry
    """
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError("matrix must be written as [[...], ...]")
    rows = []
    for row_text in split_entries(body[1:-1]):
        if not (row_text.startswith("[") and row_text.endswith("]")):
            raise ValueError(f"malformed matrix row {row_text!r}")
        rows.append([field.parse(e) for e in split_entries(row_text[1:-1])])
    if not rows:
        raise ValueError("empty matrix")
    return Matrix.over(field, rows)
