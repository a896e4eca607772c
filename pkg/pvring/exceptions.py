"""Custom exceptions for the pvring engine."""


class PVError(Exception):
    """Base exception for pvring errors."""
    pass


class FieldDomainError(PVError):
    """Exception raised when an operator maps an element onto a zero denominator."""
    pass


class FieldPresentationError(PVError):
    """Exception raised for an invalid field or operator description."""
    pass


class RingMismatchError(PVError):
    """Exception raised when polynomials from different rings or orders are mixed."""
    pass


class BudgetExhaustedError(PVError):
    """Exception raised when a computation exceeds its reduction or degree budget.

    Attributes:
        partial: Last stable intermediate result, if the caller has one to offer
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class LevelError(PVError):
    """Exception raised for invalid filtration levels."""
    pass


class UnknownOperatorError(PVError):
    """Exception raised when an operator id is not part of the system."""
    pass


class SingularMatrixError(PVError):
    """Exception raised when a matrix that must be invertible is singular."""
    pass


class InconsistentEvaluationError(PVError):
    """Exception raised when jet values do not match the derivation."""
    pass


class NotProperIdealError(PVError):
    """Exception raised when an operation needs a proper ideal and gets (1)."""
    pass


class StabilityError(PVError):
    """Exception raised when an ideal is not stable under the operators.

    Attributes:
        witness: Image of a generator that falls outside the ideal
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedQuotientError(PVError):
    """Exception raised when a quotient is not finite-dimensional over K."""
    pass


class NonInvertibleDeterminantError(PVError):
    """Exception raised when det(Z) is not a unit modulo the ideal."""
    pass


class ExpressionSyntaxError(PVError):
    """Exception raised for malformed polynomial or rational-function text.

    Attributes:
        line: 1-based line number (relative to the parsed text)
        column: 1-based column number
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class ProblemFileError(PVError):
    """Exception raised for syntax or semantic errors in a problem file.

    Attributes:
        line: 1-based line number in the file
        column: 1-based column number
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
        self.reason = message
        self.line = line
        self.column = column
