"""
Tests for the operator actions on jet rings.
"""

import random

import pytest

from pvring.cli.problem import load_problem
from pvring.exceptions import LevelError, UnknownOperatorError
from pvring.fixtures import fixture_path
from pvring.jetring import d_apply, delta_apply, embed, jet_ring, restrict, sigma_apply
from pvring.linsys import LinearSystem, Matrix

COEFFICIENTS = ("1", "-2", "x", "t", "x*t + 1", "1/(t + 2)", "t^2 - 3*x")


def test_total_derivative(shift_field):
    """Test ∂ on polynomials and on det denominators"""
    low = jet_ring(shift_field, 1, 0)
    high = jet_ring(shift_field, 1, 1)
    assert d_apply(low.parse("t*X[1,1]")) == high.parse("X[1,1] + t*X'[1,1]")
    assert d_apply(low.parse("1/det")) == high.parse("-X'[1,1]/det^2")
    assert d_apply(low.parse("t^2")) == high.parse("2*t")
    assert d_apply(low.parse("X[1,1]")).ring == high


def test_sigma_on_jets(shift_field, shift_system):
    """Test sigma(X') = X + t X' for sigma(y) = t y"""
    ring = jet_ring(shift_field, 1, 1)
    assert sigma_apply("s", ring.parse("X[1,1]"), shift_system) == ring.parse("t*X[1,1]")
    assert sigma_apply("s", ring.parse("X'[1,1]"), shift_system) == ring.parse("X[1,1] + t*X'[1,1]")
    assert sigma_apply("s", ring.parse("t"), shift_system) == ring.parse("t + 1")


def test_sigma_inverse(shift_field, shift_system):
    """Test the inverse automorphism and its composition with sigma"""
    ring = jet_ring(shift_field, 1, 1)
    X = ring.parse("X[1,1]")
    assert sigma_apply("s", X, shift_system, inverse=True) == ring.parse("X[1,1]/(t - 1)")
    f = ring.parse("X'[1,1]^2 + t*X[1,1] - 3")
    back = sigma_apply("s", sigma_apply("s", f, shift_system, inverse=True), shift_system)
    assert back == f


def test_sigma_on_det_denominator(shift_field, shift_system):
    """Test sigma(1/det) = 1/(det(A) det)"""
    ring = jet_ring(shift_field, 1, 0)
    assert sigma_apply("s", ring.parse("1/det"), shift_system) == ring.parse("1/(t*det)")


def test_images_cached_per_system(shift_field, shift_system):
    """Test that jet images are cached on the system that produced them"""
    ring = jet_ring(shift_field, 1, 1)
    X1 = ring.parse("X'[1,1]")
    sigma_apply("s", X1, shift_system)
    assert set(shift_system.jet_image_cache) == {(ring, "s", False)}
    K = shift_field.field
    other = LinearSystem(shift_field, 1, {"s": Matrix.over(K, [["t^2"]])})
    assert other.jet_image_cache == {}
    assert sigma_apply("s", X1, other) == ring.parse("2*t*X[1,1] + t^2*X'[1,1]")
    assert sigma_apply("s", X1, shift_system) == ring.parse("X[1,1] + t*X'[1,1]")


def test_sigma_commutes_with_partial(shift_field, shift_system):
    """Test sigma(∂f) = ∂(sigma f)"""
    ring = jet_ring(shift_field, 1, 1)
    f = ring.parse("t*X'[1,1]^2 - X[1,1]/det")
    assert d_apply(sigma_apply("s", f, shift_system)) == sigma_apply("s", d_apply(f), shift_system)


def test_delta_on_jets(delta_field, delta_system):
    """Test a derivation with B = 0 acting on coefficients only"""
    ring = jet_ring(delta_field, 1, 1)
    assert delta_apply("dx", ring.parse("x*X[1,1]"), delta_system) == ring.parse("X[1,1]")
    assert delta_apply("dx", ring.parse("t*X'[1,1]"), delta_system).is_zero()


def test_delta_with_trace(mixed_field, mixed_system):
    """Test delta(X) = t X and delta(1/det) = -t/det for B = t"""
    ring = jet_ring(mixed_field, 1, 1)
    assert delta_apply("dx", ring.parse("X[1,1]"), mixed_system) == ring.parse("t*X[1,1]")
    assert delta_apply("dx", ring.parse("X'[1,1]"), mixed_system) == ring.parse("X[1,1] + t*X'[1,1]")
    assert delta_apply("dx", ring.parse("1/det"), mixed_system) == ring.parse("-t/det")
    assert sigma_apply("s", ring.parse("x*X[1,1]"), mixed_system) == ring.parse("(x + 1)*t*X[1,1]")


def test_delta_commutes_with_partial(mixed_field, mixed_system):
    """Test delta(∂f) = ∂(delta f)"""
    ring = jet_ring(mixed_field, 1, 0)
    f = ring.parse("x*t*X[1,1]^2 + 1/det")
    assert d_apply(delta_apply("dx", f, mixed_system)) == delta_apply("dx", d_apply(f), mixed_system)


def test_unknown_operator(delta_field, delta_system):
    """Test that operators are looked up by kind"""
    ring = jet_ring(delta_field, 1, 0)
    X = ring.parse("X[1,1]")
    with pytest.raises(UnknownOperatorError, match="not an automorphism"):
        sigma_apply("dx", X, delta_system)
    with pytest.raises(UnknownOperatorError, match="not a delta-derivation"):
        delta_apply("s", X, delta_system)


def test_size_mismatch(delta_field, delta_system):
    """Test that an n = 2 element is rejected by an n = 1 system"""
    ring = jet_ring(delta_field, 2, 0)
    with pytest.raises(LevelError, match="n=2"):
        delta_apply("dx", ring.parse("X[1,1]"), delta_system)


def test_embed_and_restrict(delta_field):
    """Test moving elements between levels"""
    low = jet_ring(delta_field, 1, 0)
    high = jet_ring(delta_field, 1, 2)
    f = low.parse("X[1,1]^2 + x")
    lifted = embed(f, 2)
    assert lifted.ring == high
    assert restrict(lifted, 0) == f
    with pytest.raises(LevelError, match="does not lie in S_0"):
        restrict(high.parse("X'[1,1]"), 0)
    with pytest.raises(LevelError, match="cannot embed"):
        embed(lifted, 1)


def _random_element(dfield, rng, n):
    K = dfield.field
    ring = jet_ring(dfield, n, rng.randint(0, 2))
    total = ring.zero
    for _ in range(rng.randint(1, 3)):
        term = ring.constant(K.parse(rng.choice(COEFFICIENTS)))
        for _ in range(rng.randint(0, 2)):
            v = rng.choice(ring.jet_vars)
            term = term * ring.element(ring.var(v.row, v.col, v.order))
        total = total + term
    return ring.element(total.poly, rng.randint(0, 2))


@pytest.mark.parametrize("name", ["trivial_delta.pv", "shift_t.pv", "mixed.pv"])
def test_random_elements_commute(name):
    """Test that the operators commute on random elements of the bundled systems"""
    system = load_problem(fixture_path(name)).system
    rng = random.Random(11)
    for _ in range(50):
        f = _random_element(system.field, rng, system.n)
        for s in system.sigma_ids:
            assert d_apply(sigma_apply(s, f, system)) == sigma_apply(s, d_apply(f), system)
            assert sigma_apply(s, sigma_apply(s, f, system, inverse=True), system) == f
            assert sigma_apply(s, sigma_apply(s, f, system), system, inverse=True) == f
            for dx in system.delta_ids:
                assert sigma_apply(s, delta_apply(dx, f, system), system) == delta_apply(
                    dx, sigma_apply(s, f, system), system
                )
        for dx in system.delta_ids:
            assert d_apply(delta_apply(dx, f, system)) == delta_apply(dx, d_apply(f), system)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
