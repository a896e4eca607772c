"""
Canonical printing of sparse polynomials.

Terms are printed in the order given (callers pass them descending under
their term order), with explicit ``*`` and ``^`` so that every printed form
parses back through :mod:`pvring.utils.expressions`.
"""

from typing import Callable, Iterable, Sequence, Tuple

# (negative, magnitude text, magnitude is one)
CoefficientParts = Tuple[bool, str, bool]


def format_monomial(exponents: Sequence[int], names: Sequence[str]) -> str:
    """Render an exponent vector, or ``""`` for the unit monomial."""
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_terms(
    terms: Iterable[Tuple[Sequence[int], object]],
    names: Sequence[str],
    describe: Callable[[object], CoefficientParts],
) -> str:
    """
    Render a sum of terms.

    Args:
        terms: (exponents, coefficient) pairs, already in print order
        names: Variable names aligned with the exponent vectors
        describe: Splits a coefficient into sign, magnitude text and a
            flag telling whether the magnitude is one

    Returns:
        Canonical text, ``"0"`` for the empty sum
    """
    pieces = []
    for exponents, coeff in terms:
        negative, magnitude, unit = describe(coeff)
        mono = format_monomial(exponents, names)
        if not mono:
            body = magnitude
        elif unit:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"
