import pytest

from pvring.exceptions import LevelError
from pvring.jetring import JetIdeal, jet_ring


def test_generate_is_saturated(delta_field):
    """Test that generating an ideal removes det factors"""
    ring = jet_ring(delta_field, 1, 0)
    ideal = JetIdeal.generate(ring, ["X[1,1]^2 - X[1,1]"])
    assert ideal.to_text() == "X[1,1] - 1"
    assert ideal.is_saturated()
    assert "X[1,1]^3 - 1" in ideal
    assert "X[1,1] + 1" not in ideal


def test_det_generates_unit_ideal(delta_field):
    """Test that det is a unit of the jet ring"""
    ring = jet_ring(delta_field, 2, 0)
    ideal = JetIdeal.generate(ring, ["X[1,1]*X[2,2] - X[1,2]*X[2,1]"])
    assert ideal.is_trivial()
    assert JetIdeal.unit(ring).is_trivial()


def test_zero_ideal(delta_field):
    """Test the zero ideal"""
    ring = jet_ring(delta_field, 1, 1)
    ideal = JetIdeal.zero(ring)
    assert ideal.is_zero()
    assert not ideal.is_trivial()
    assert ideal.to_text() == "0"
    assert JetIdeal.generate(ring, []) == ideal


def test_denominators_are_cleared(delta_field):
    """Test that p/det^e and p generate the same ideal"""
    ring = jet_ring(delta_field, 1, 1)
    a = JetIdeal.generate(ring, ["(X'[1,1] - t)/det^2"])
    b = JetIdeal.generate(ring, ["X'[1,1] - t"])
    assert a == b
    assert a.contains("(X'[1,1] - t)/det")


def test_restrict_and_embed(delta_field):
    """Test intersection with a lower level and extension to a higher one"""
    ring = jet_ring(delta_field, 1, 1)
    ideal = JetIdeal.generate(ring, ["X'[1,1] - X[1,1]", "X[1,1]^2 - t"])
    low = ideal.restrict(0)
    assert low.level == 0
    assert low.to_text() == "X[1,1]^2 - t"
    assert low.embed(1).contains_ideal(JetIdeal.generate(ring, ["X[1,1]^2 - t"]))
    assert not low.embed(1).contains("X'[1,1] - X[1,1]")
    with pytest.raises(LevelError, match="cannot restrict"):
        low.restrict(1)
    with pytest.raises(LevelError, match="cannot embed"):
        ideal.embed(0)


def test_reduce(delta_field):
    """Test normal forms modulo a jet ideal"""
    ring = jet_ring(delta_field, 1, 0)
    ideal = JetIdeal.generate(ring, ["X[1,1] - x"])
    assert ideal.reduce("X[1,1]^2 + 1") == ring.parse_poly("x^2 + 1")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
