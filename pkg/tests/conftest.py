"""Shared fields and systems for the pvring tests."""

import pytest

from pvring.basefield import BaseField, DifferenceDifferentialField, OperatorSpec
from pvring.linsys import LinearSystem, Matrix
from pvring.polyring import RATIONALS, PolyRing


@pytest.fixture
def qq_t():
    """QQ(t)"""
    return BaseField(["t"])


@pytest.fixture
def shift_field(qq_t):
    """QQ(t) with sigma(t) = t + 1 and partial = d/dt"""
    sigma = OperatorSpec.automorphism(qq_t, "s", {"t": "t + 1"}, {"t": "t - 1"})
    return DifferenceDifferentialField.with_parameter(qq_t, "t", [sigma])


@pytest.fixture
def shift_system(shift_field):
    """sigma(y) = t y"""
    K = shift_field.field
    return LinearSystem(shift_field, 1, {"s": Matrix.over(K, [["t"]])})


@pytest.fixture
def delta_field():
    """QQ(x, t) with delta = d/dx and partial = d/dt"""
    K = BaseField(["x", "t"])
    return DifferenceDifferentialField.with_parameter(K, "t", [OperatorSpec.d_by(K, "x", "dx")])


@pytest.fixture
def delta_system(delta_field):
    """delta(y) = 0"""
    K = delta_field.field
    return LinearSystem(delta_field, 1, B={"dx": Matrix.over(K, [[0]])})


@pytest.fixture
def mixed_field():
    """QQ(x, t) with sigma(x) = x + 1, delta = d/dx and partial = d/dt"""
    K = BaseField(["x", "t"])
    sigma = OperatorSpec.automorphism(K, "s", {"x": "x + 1"}, {"x": "x - 1"})
    return DifferenceDifferentialField.with_parameter(K, "t", [sigma, OperatorSpec.d_by(K, "x", "dx")])


@pytest.fixture
def mixed_system(mixed_field):
    """sigma(y) = t y, delta(y) = t y"""
    K = mixed_field.field
    return LinearSystem(mixed_field, 1, {"s": Matrix.over(K, [["t"]])}, {"dx": Matrix.over(K, [["t"]])})


@pytest.fixture
def qq_xy():
    """QQ[x, y] with grevlex"""
    return PolyRing(["x", "y"], RATIONALS)


@pytest.fixture
def qq_xyz():
    """QQ[x, y, z] with grevlex"""
    return PolyRing(["x", "y", "z"], RATIONALS)
