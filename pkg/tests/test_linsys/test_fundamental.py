import pytest

from pvring.exceptions import NonInvertibleDeterminantError
from pvring.jetring import JetIdeal, jet_ring
from pvring.linsys import verify_fundamental_matrix


def test_generic_solution(mixed_field, mixed_system):
    """Test that X is a fundamental matrix modulo the zero ideal"""
    ring = jet_ring(mixed_field, 1, 0)
    assert verify_fundamental_matrix([["X[1,1]"]], JetIdeal.zero(ring), mixed_system)


def test_constant_solution(delta_field, delta_system):
    """Test the solution 1 of delta(y) = 0"""
    ring = jet_ring(delta_field, 1, 0)
    ideal = JetIdeal.generate(ring, ["X[1,1] - 1"])
    assert verify_fundamental_matrix([["X[1,1]"]], ideal, delta_system)


def test_wrong_quotient(delta_field, delta_system):
    """Test that X = x is not a solution of delta(y) = 0"""
    ring = jet_ring(delta_field, 1, 0)
    ideal = JetIdeal.generate(ring, ["X[1,1] - x"])
    assert not verify_fundamental_matrix([["X[1,1]"]], ideal, delta_system)


def test_singular_candidate(mixed_field, mixed_system):
    """Test that a candidate with non-unit determinant is rejected"""
    ring = jet_ring(mixed_field, 1, 0)
    with pytest.raises(NonInvertibleDeterminantError, match="not invertible"):
        verify_fundamental_matrix([["X[1,1] - 1"]], JetIdeal.zero(ring), mixed_system)


def test_shape_mismatch(mixed_field, mixed_system):
    """Test that Z must be n x n"""
    ring = jet_ring(mixed_field, 1, 0)
    with pytest.raises(ValueError, match="shape"):
        verify_fundamental_matrix([["X[1,1]", "1"]], JetIdeal.zero(ring), mixed_system)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
