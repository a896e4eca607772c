"""
Tests for the bounded constants search.
"""

import pytest

from pvring.exceptions import NotProperIdealError, StabilityError, UnsupportedQuotientError
from pvring.jetring import JetIdeal, jet_ring
from pvring.prolong import build_chain, find_constants


def test_constants_of_trivial_quotient(delta_field, delta_system):
    """Test that the constants of K = QQ(x, t) under d/dx are the t-polynomials"""
    report = build_chain(delta_system, {0: ["X[1,1] - 1"]}, depth=3)
    result = find_constants(report.ideal(3), delta_system, degree_bound=3)
    K = delta_field.field
    assert [s.constant_value() for s in result.solutions] == [K.parse(e) for e in ("1", "t", "t^2", "t^3")]
    assert result.outside_base == ()
    assert not result.new_constants
    assert [s.to_text() for s in result.staircase] == ["1"]


def test_new_constant(delta_field, delta_system):
    """Test that X is a new constant of S_0 / (X^2 - t)"""
    ring = jet_ring(delta_field, 1, 0)
    m = JetIdeal.generate(ring, ["X[1,1]^2 - t"])
    result = find_constants(m, delta_system, degree_bound=0)
    assert [s.to_text() for s in result.solutions] == ["X[1,1]", "1"]
    assert [s.to_text() for s in result.outside_base] == ["X[1,1]"]
    assert result.new_constants
    text = result.to_text()
    assert "outside K: 1" in text
    assert text.endswith("complete only up to the degree bound\n")
    records = dict(result.to_records())
    assert records["constants.count"] == "2"
    assert records["constants.outside_base"] == "1"


def test_degree_bound_limits_solutions(delta_field, delta_system):
    """Test that the number of solutions grows with the bound"""
    ring = jet_ring(delta_field, 1, 0)
    m = JetIdeal.generate(ring, ["X[1,1]^2 - t"])
    assert len(find_constants(m, delta_system, degree_bound=2).solutions) == 6
    assert len(find_constants(m, delta_system, degree_bound=2).outside_base) == 3


def test_denominator_candidates(delta_field, delta_system):
    """Test that denominators enlarge the ansatz"""
    ring = jet_ring(delta_field, 1, 0)
    m = JetIdeal.generate(ring, ["X[1,1] - 1"])
    result = find_constants(m, delta_system, degree_bound=0, denominators=["1", "t"])
    K = delta_field.field
    values = [s.constant_value() for s in result.solutions]
    assert K.parse("1/t") in values
    assert K.one in values
    with pytest.raises(ValueError, match="zero denominator"):
        find_constants(m, delta_system, degree_bound=0, denominators=["0"])


def test_rejected_inputs(delta_field, delta_system):
    """Test the preconditions of the constants search"""
    ring = jet_ring(delta_field, 1, 0)
    with pytest.raises(NotProperIdealError):
        find_constants(JetIdeal.unit(ring), delta_system)
    with pytest.raises(StabilityError, match="not a ΣΔ-ideal") as excinfo:
        find_constants(JetIdeal.generate(ring, ["X[1,1] - x"]), delta_system)
    assert excinfo.value.witness is not None
    upper = jet_ring(delta_field, 1, 1)
    with pytest.raises(UnsupportedQuotientError):
        find_constants(JetIdeal.generate(upper, ["X[1,1] - 1"]), delta_system)
    with pytest.raises(ValueError, match="non-negative"):
        find_constants(JetIdeal.generate(ring, ["X[1,1] - 1"]), delta_system, degree_bound=-1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
