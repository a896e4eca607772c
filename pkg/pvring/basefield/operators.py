"""
Operators on the base field and the difference-differential field description.

A field description carries automorphisms Sigma, derivations Delta and exactly
one parameter derivation (the partial operator). Automorphisms act by
substitution of the generators and are supplied together with explicit inverse
images; derivations are determined by the images of the generators and extend
to K by the Leibniz and quotient rules.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import FieldDomainError, FieldPresentationError, UnknownOperatorError
from .field import BaseField, RationalFunction


class OperatorKind(Enum):
    """Kinds of operators acting on K."""
    AUTOMORPHISM = "automorphism"
    DELTA = "delta-derivation"
    PARTIAL = "partial-derivation"


class OperatorSpec:
    """
    One operator acting on K.

    Args:
        field: The base field the operator acts on
        kind: Automorphism, delta-derivation or the partial derivation
        op_id: Identifier
        images: Image of each generator (missing entries: identity for
            automorphisms, 0 for derivations)
        inverse_images: Images under the inverse automorphism (automorphisms only)
    """

    def __init__(
        self,
        field: BaseField,
        kind: OperatorKind,
        op_id: str,
        images: Optional[Mapping[str, object]] = None,
        inverse_images: Optional[Mapping[str, object]] = None,
    ):
        self.field = field
        self.kind = kind
        self.id = op_id
        self.images = self._image_tuple(images or {}, kind)
        if kind is OperatorKind.AUTOMORPHISM:
            self.inverse_images = self._image_tuple(inverse_images or {}, kind)
        else:
            if inverse_images:
                raise FieldPresentationError(f"derivation {op_id!r} cannot carry inverse images")
            self.inverse_images = None

    def _image_tuple(self, images: Mapping[str, object], kind: OperatorKind) -> Tuple[RationalFunction, ...]:
        for name in images:
            if name not in self.field.names:
                raise FieldPresentationError(f"operator {self.id!r}: unknown variable {name!r}")
        result = []
        for name in self.field.names:
            if name in images:
                result.append(self.field.convert(images[name]))
            elif kind is OperatorKind.AUTOMORPHISM:
                result.append(self.field.gen(name))
            else:
                result.append(self.field.zero)
        return tuple(result)

    # -- constructors ------------------------------------------------------

    @classmethod
    def automorphism(cls, field, op_id, images, inverse_images) -> "OperatorSpec":
        return cls(field, OperatorKind.AUTOMORPHISM, op_id, images, inverse_images)

    @classmethod
    def derivation(cls, field, op_id, images) -> "OperatorSpec":
        return cls(field, OperatorKind.DELTA, op_id, images)

    @classmethod
    def parameter(cls, field, op_id, images) -> "OperatorSpec":
        return cls(field, OperatorKind.PARTIAL, op_id, images)

    @classmethod
    def d_by(cls, field: BaseField, var: str, op_id: Optional[str] = None,
             kind: OperatorKind = OperatorKind.DELTA) -> "OperatorSpec":
        """The partial derivative d/d(var) as an operator of the given kind."""
        return cls(field, kind, op_id or f"d{var}", {var: 1})

    @property
    def is_automorphism(self) -> bool:
        return self.kind is OperatorKind.AUTOMORPHISM

    @property
    def is_derivation(self) -> bool:
        return self.kind is not OperatorKind.AUTOMORPHISM

    def image_map(self) -> Dict[str, RationalFunction]:
        return dict(zip(self.field.names, self.images))

    def inverse(self) -> "OperatorSpec":
        """The inverse automorphism as an operator in its own right."""
        if not self.is_automorphism:
            raise FieldPresentationError(f"operator {self.id!r} is not an automorphism")
        return OperatorSpec(
            self.field,
            OperatorKind.AUTOMORPHISM,
            f"{self.id}^-1",
            dict(zip(self.field.names, self.inverse_images)),
            dict(zip(self.field.names, self.images)),
        )

    def __repr__(self) -> str:
        return f"OperatorSpec({self.kind.value}, {self.id!r})"


def _substitute(op: OperatorSpec, f: RationalFunction, images: Sequence[RationalFunction]) -> RationalFunction:
    field = f.field
    num = _evaluate(f.num, images, field)
    den = _evaluate(f.den, images, field)
    if den.is_zero():
        raise FieldDomainError(f"operator {op.id!r} maps the denominator of {f} to zero")
    return num / den


def _evaluate(poly, images: Sequence[RationalFunction], field: BaseField) -> RationalFunction:
    """Evaluate a sympy polynomial at field elements over a common denominator."""
    ring = field.poly_ring
    if all(img.den == ring.one for img in images):
        return field.from_polys(poly.compose(list(zip(ring.gens, (img.num for img in images)))), ring.one)

    nvars = len(images)
    top = [0] * nvars
    for monom in poly.monoms():
        for i, e in enumerate(monom):
            top[i] = max(top[i], e)

    num = ring.zero
    for monom, coeff in poly.terms():
        term = ring.ground_new(coeff)
        for i, e in enumerate(monom):
            if top[i]:
                term *= images[i].num ** e * images[i].den ** (top[i] - e)
        num += term
    den = ring.one
    for i in range(nvars):
        if top[i]:
            den *= images[i].den ** top[i]
    return field.from_polys(num, den)


def _derive_poly(poly, images: Sequence[RationalFunction], field: BaseField) -> RationalFunction:
    ring = field.poly_ring
    result = field.zero
    for gen, img in zip(ring.gens, images):
        if img.is_zero():
            continue
        partial = poly.diff(gen)
        if partial:
            result = result + field.from_polys(partial, ring.one) * img
    return result


def apply(op: OperatorSpec, f: RationalFunction) -> RationalFunction:
    """
    Apply an operator to an element of K.

    Automorphisms act by substitution of the generator images; derivations act
    by the Leibniz and quotient rules extended from the generator images.

    Args:
        op: Operator
        f: Canonical field element

    Returns:
        Canonical image of f

    Raises:
        FieldDomainError: If the substitution produces a zero denominator
    """
    if op.is_automorphism:
        return _substitute(op, f, op.images)
    field = f.field
    d_num = _derive_poly(f.num, op.images, field)
    if f.den == field.poly_ring.one:
        return d_num
    d_den = _derive_poly(f.den, op.images, field)
    num = field.from_polys(f.num, field.poly_ring.one)
    den = field.from_polys(f.den, field.poly_ring.one)
    return (d_num * den - num * d_den) / (den * den)


def apply_inverse(op: OperatorSpec, f: RationalFunction) -> RationalFunction:
    """
    Apply the inverse of an automorphism through its supplied inverse images.

    Raises:
        FieldPresentationError: If op is not an automorphism
        FieldDomainError: If the substitution produces a zero denominator
    """
    if not op.is_automorphism:
        raise FieldPresentationError(f"operator {op.id!r} is not an automorphism")
    return _substitute(op, f, op.inverse_images)


@dataclass(frozen=True)
class CommutationFailure:
    """A pair of operators that disagree on a generator."""
    first: str
    second: str
    variable: str
    first_after_second: RationalFunction  # first(second(v))
    second_after_first: RationalFunction  # second(first(v))


@dataclass(frozen=True)
class CommutationReport:
    """Result of :meth:`DifferenceDifferentialField.check_commutation`."""
    pairs_checked: int
    failures: Tuple[CommutationFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


class DifferenceDifferentialField:
    """
    A presentation of K as a field with commuting automorphisms Sigma,
    derivations Delta and one parameter derivation.

    Args:
        field: The base field
        operators: All operators; exactly one must be the parameter derivation

    Raises:
        FieldPresentationError: On duplicate ids, a missing or repeated
            parameter derivation, empty Sigma and Delta, or automorphism images
            that do not invert each other
    """

    def __init__(self, field: BaseField, operators: Sequence[OperatorSpec]):
        self.field = field
        ids = [op.id for op in operators]
        if len(set(ids)) != len(ids):
            raise FieldPresentationError(f"duplicate operator ids in {ids}")
        for op in operators:
            if op.field != field:
                raise FieldPresentationError(f"operator {op.id!r} acts on another field")

        partials = [op for op in operators if op.kind is OperatorKind.PARTIAL]
        if len(partials) != 1:
            raise FieldPresentationError(
                f"exactly one parameter derivation is required, got {len(partials)}"
            )
        self.partial: OperatorSpec = partials[0]
        self.sigmas: Tuple[OperatorSpec, ...] = tuple(
            sorted((op for op in operators if op.kind is OperatorKind.AUTOMORPHISM), key=lambda op: op.id)
        )
        self.deltas: Tuple[OperatorSpec, ...] = tuple(
            sorted((op for op in operators if op.kind is OperatorKind.DELTA), key=lambda op: op.id)
        )
        if not self.sigmas and not self.deltas:
            raise FieldPresentationError("Sigma and Delta cannot both be empty")

        self._by_id: Dict[str, OperatorSpec] = {op.id: op for op in operators}
        # jet rings over this field by (n, level)
        self.ring_cache: Dict[Tuple[int, int], object] = {}
        for sigma in self.sigmas:
            self._verify_inverse(sigma)

    @classmethod
    def with_parameter(
        cls, field: BaseField, parameter: str, operators: Sequence[OperatorSpec] = ()
    ) -> "DifferenceDifferentialField":
        """The field with the given operators and the parameter derivation d/d(parameter)."""
        if parameter not in field.names:
            raise FieldPresentationError(f"parameter {parameter!r} is not a field variable")
        partial = OperatorSpec.d_by(field, parameter, kind=OperatorKind.PARTIAL)
        return cls(field, list(operators) + [partial])

    def _verify_inverse(self, sigma: OperatorSpec) -> None:
        for var in self.field.names:
            v = self.field.gen(var)
            try:
                there_and_back = apply_inverse(sigma, apply(sigma, v))
                back_and_there = apply(sigma, apply_inverse(sigma, v))
            except FieldDomainError as exc:
                raise FieldPresentationError(f"automorphism {sigma.id!r}: {exc}") from exc
            if there_and_back != v or back_and_there != v:
                raise FieldPresentationError(
                    f"automorphism {sigma.id!r}: inverse images do not invert the images on {var}"
                )

    # -- lookup ------------------------------------------------------------

    @property
    def operators(self) -> Tuple[OperatorSpec, ...]:
        return self.sigmas + self.deltas + (self.partial,)

    def operator(self, op_id: str) -> OperatorSpec:
        """
        Look up an operator by id.

        Raises:
            UnknownOperatorError: If no operator has this id
        """
        try:
            return self._by_id[op_id]
        except KeyError:
            raise UnknownOperatorError(f"unknown operator {op_id!r}") from None

    def _resolve(self, op: Union[str, OperatorSpec]) -> OperatorSpec:
        return self.operator(op) if isinstance(op, str) else op

    # -- operations --------------------------------------------------------

    def apply(self, op: Union[str, OperatorSpec], f) -> RationalFunction:
        return apply(self._resolve(op), self.field.convert(f))

    def apply_inverse(self, op: Union[str, OperatorSpec], f) -> RationalFunction:
        return apply_inverse(self._resolve(op), self.field.convert(f))

    def partial_apply(self, f) -> RationalFunction:
        return apply(self.partial, self.field.convert(f))

    def check_commutation(self) -> CommutationReport:
        """
        Check that every pair of operators commutes on every generator.

        Commutation on generators extends to all of K for automorphisms and
        derivations, so an empty failure list certifies the presentation.

        Returns:
            CommutationReport listing every failing (pair, generator)
        """
        failures: List[CommutationFailure] = []
        pairs = list(combinations(self.operators, 2))
        for mu, tau in pairs:
            for var in self.field.names:
                v = self.field.gen(var)
                left = apply(mu, apply(tau, v))
                right = apply(tau, apply(mu, v))
                if left != right:
                    failures.append(CommutationFailure(mu.id, tau.id, var, left, right))
        return CommutationReport(pairs_checked=len(pairs), failures=tuple(failures))

    def is_constant(self, f) -> bool:
        """
        Test membership in the Sigma-Delta constants of K.

        Returns:
            True iff sigma(f) = f for all sigma and delta(f) = 0 for all delta
        """
        f = self.field.convert(f)
        if f.is_constant():
            return True
        for sigma in self.sigmas:
            if apply(sigma, f) != f:
                return False
        for delta in self.deltas:
            if not apply(delta, f).is_zero():
                return False
        return True

    def __repr__(self) -> str:
        ids = ", ".join(op.id for op in self.operators)
        return f"DifferenceDifferentialField({self.field}, [{ids}])"
