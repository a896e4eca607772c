import pytest

from pvring.basefield import BaseField, DifferenceDifferentialField, OperatorKind, OperatorSpec, apply
from pvring.exceptions import FieldDomainError, FieldPresentationError, UnknownOperatorError


def test_shift_automorphism(shift_field):
    """Test substitution by sigma(t) = t + 1 and its inverse"""
    K = shift_field.field
    assert shift_field.apply("s", K.parse("t^2")) == K.parse("t^2 + 2*t + 1")
    assert shift_field.apply("s", K.parse("1/t")) == K.parse("1/(t + 1)")
    assert shift_field.apply_inverse("s", K.parse("t")) == K.parse("t - 1")


def test_derivation_quotient_rule(delta_field):
    """Test d/dx through the quotient rule"""
    K = delta_field.field
    assert delta_field.apply("dx", K.parse("x^3*t")) == K.parse("3*x^2*t")
    assert delta_field.apply("dx", K.parse("1/x")) == K.parse("-1/x^2")
    assert delta_field.apply("dx", K.parse("t")).is_zero()


def test_partial_apply(shift_field):
    """Test the parameter derivation"""
    K = shift_field.field
    assert shift_field.partial_apply(K.parse("t^2")) == K.parse("2*t")
    assert shift_field.partial.kind is OperatorKind.PARTIAL


def test_unlisted_images_default():
    """Test identity and zero defaults for unlisted generators"""
    K = BaseField(["x", "t"])
    sigma = OperatorSpec.automorphism(K, "s", {"x": "x + 1"}, {"x": "x - 1"})
    delta = OperatorSpec.derivation(K, "d", {"x": 1})
    assert sigma.image_map()["t"] == K.gen("t")
    assert delta.image_map()["t"].is_zero()


def test_commutation_passes(mixed_field):
    """Test commuting sigma, delta and the parameter derivation"""
    report = mixed_field.check_commutation()
    assert report.passed
    assert report.pairs_checked == 3


def test_commutation_failure():
    """Test that sigma(t) = 2t does not commute with d/dt"""
    K = BaseField(["t"])
    sigma = OperatorSpec.automorphism(K, "s", {"t": "2*t"}, {"t": "t/2"})
    field = DifferenceDifferentialField.with_parameter(K, "t", [sigma])
    report = field.check_commutation()
    assert not report.passed
    failure = report.failures[0]
    assert failure.variable == "t"
    assert {failure.first, failure.second} == {"s", "dt"}


def test_inverse_images_checked():
    """Test that wrong inverse images are rejected"""
    K = BaseField(["t"])
    sigma = OperatorSpec.automorphism(K, "s", {"t": "t + 1"}, {"t": "t + 1"})
    with pytest.raises(FieldPresentationError, match="do not invert"):
        DifferenceDifferentialField.with_parameter(K, "t", [sigma])


def test_field_presentation_errors():
    """Test invalid operator sets"""
    K = BaseField(["t"])
    with pytest.raises(FieldPresentationError, match="cannot both be empty"):
        DifferenceDifferentialField.with_parameter(K, "t", [])
    with pytest.raises(FieldPresentationError, match="exactly one parameter"):
        DifferenceDifferentialField(K, [OperatorSpec.d_by(K, "t", "d")])
    with pytest.raises(FieldPresentationError):
        DifferenceDifferentialField.with_parameter(K, "u", [OperatorSpec.d_by(K, "t", "d")])


def test_zero_denominator_under_operator():
    """Test FieldDomainError when an image kills a denominator"""
    K = BaseField(["t"])
    collapse = OperatorSpec.automorphism(K, "c", {"t": "2"}, {"t": "2"})
    with pytest.raises(FieldDomainError):
        apply(collapse, K.parse("1/(t - 2)"))


def test_unknown_operator(shift_field):
    """Test lookup of a missing operator id"""
    with pytest.raises(UnknownOperatorError):
        shift_field.operator("zz")


def test_is_constant(mixed_field):
    """Test membership in the constants of K"""
    K = mixed_field.field
    assert mixed_field.is_constant(K.parse("3/7"))
    assert mixed_field.is_constant(K.parse("t^2 + 1"))
    assert not mixed_field.is_constant(K.parse("x"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
