import pytest

from pvring.exceptions import ExpressionSyntaxError, LevelError, RingMismatchError
from pvring.jetring import FilteredElement, JetVar, jet_key, jet_ring


def test_jet_names():
    """Test the printed names of jet variables"""
    assert JetVar(1, 2, 0).name == "X[1,2]"
    assert JetVar(1, 2, 1).name == "X'[1,2]"
    assert JetVar(2, 1, 3).name == "X^(3)[2,1]"
    assert JetVar(1, 1, 0).shifted(2).name == "X^(2)[1,1]"


def test_jet_key():
    """Test parsing of jet names into (row, col, order)"""
    assert jet_key("X[1,2]") == (1, 2, 0)
    assert jet_key("X''[2,1]") == (2, 1, 2)
    assert jet_key("X^(4)[1,1]") == (1, 1, 4)
    with pytest.raises(LevelError, match="not a jet variable"):
        jet_key("det")


def test_variables_by_decreasing_order(delta_field):
    """Test that higher jets come first in the variable list"""
    ring = jet_ring(delta_field, 2, 1)
    assert ring.poly_ring.variables[:4] == ("X'[1,1]", "X'[1,2]", "X'[2,1]", "X'[2,2]")
    assert ring.variables_up_to(0) == ("X[1,1]", "X[1,2]", "X[2,1]", "X[2,2]")
    assert ring.poly_ring.order.kind == "block"


def test_lower_ring_is_restriction(delta_field):
    """Test that the level-d ring is the restriction of the level-(d+1) ring"""
    upper = jet_ring(delta_field, 2, 2)
    lower = jet_ring(delta_field, 2, 1)
    assert upper.poly_ring.subring(upper.variables_up_to(1)) == lower.poly_ring


def test_shared_instances(delta_field):
    """Test that jet_ring returns one instance per (field, n, level)"""
    assert jet_ring(delta_field, 1, 2) is jet_ring(delta_field, 1, 2)
    assert jet_ring(delta_field, 1, 2) != jet_ring(delta_field, 1, 1)


def test_rings_cached_per_field(delta_field, mixed_field):
    """Test that each field keeps its own jet rings"""
    ring = jet_ring(delta_field, 2, 3)
    assert delta_field.ring_cache[(2, 3)] is ring
    assert (2, 3) not in mixed_field.ring_cache
    other = jet_ring(mixed_field, 2, 3)
    assert other != ring
    assert mixed_field.ring_cache[(2, 3)] is other


def test_determinant(delta_field):
    """Test the determinant polynomial of a 2 x 2 jet ring"""
    ring = jet_ring(delta_field, 2, 0)
    assert ring.det == ring.parse_poly("X[1,1]*X[2,2] - X[1,2]*X[2,1]")
    assert ring.parse("det").poly == ring.det


def test_unknown_jet(delta_field):
    """Test that jets outside the ring are rejected"""
    ring = jet_ring(delta_field, 1, 1)
    with pytest.raises(LevelError, match="not a variable"):
        ring.var(1, 1, 2)
    with pytest.raises(LevelError, match="not a variable"):
        ring.var(2, 1, 0)
    with pytest.raises(LevelError):
        jet_ring(delta_field, 0, 1)


def test_parse_with_field_coefficients(delta_field):
    """Test jet text with base-field coefficients"""
    ring = jet_ring(delta_field, 1, 1)
    f = ring.parse("t*X'[1,1] + X[1,1]/x")
    assert f.det_power == 0
    assert f.order() == 1
    assert ring.parse("x - t").order() == -1


def test_det_power_canonical(delta_field):
    """Test that det factors cancel against the denominator"""
    ring = jet_ring(delta_field, 1, 0)
    X = ring.var(1, 1)
    e = FilteredElement(ring, X ** 3 + X ** 2, 3)
    assert e.det_power == 1
    assert e.poly == X + 1
    assert FilteredElement(ring, ring.poly_ring.zero, 4).det_power == 0


def test_element_arithmetic(delta_field):
    """Test sums, products and quotients with det denominators"""
    ring = jet_ring(delta_field, 1, 0)
    inv = ring.parse("1/det")
    assert inv.to_text() == "(1)/det"
    X = ring.parse("X[1,1]")
    assert X * inv == ring.one
    assert (X + inv).det_power == 1
    assert (X + inv) * X == ring.parse("X[1,1]^2 + 1")
    assert ring.parse("det^2") / ring.parse("t*det") == ring.parse("X[1,1]/t")
    assert (X ** -2).det_power == 2


def test_non_unit_inverse(delta_field):
    """Test that only c * det^k can be inverted"""
    ring = jet_ring(delta_field, 1, 1)
    with pytest.raises(ExpressionSyntaxError, match="not a unit"):
        ring.parse("1/(X[1,1] + 1)")
    with pytest.raises(ZeroDivisionError):
        ring.parse("X'[1,1]").inverse()


def test_ring_mismatch(delta_field):
    """Test that elements of different levels do not mix"""
    low = jet_ring(delta_field, 1, 0)
    high = jet_ring(delta_field, 1, 1)
    with pytest.raises(RingMismatchError):
        low.parse("X[1,1]") + high.parse("X[1,1]")
    assert low.parse("X[1,1]") != high.parse("X[1,1]")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
