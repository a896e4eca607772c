"""
Tests for prolongation ideals, the closure hypothesis and certificates.
"""

import random

import pytest

from pvring.exceptions import InconsistentEvaluationError, LevelError, SingularMatrixError
from pvring.jetring import JetIdeal, jet_ring
from pvring.prolong import (
    JetEvaluation,
    Witness,
    WitnessStep,
    certify_extension,
    check_closure,
    check_consistency,
    evaluation_kernel,
    prolongation_ideal,
)


def test_prolongation_ideal(delta_field):
    """Test b = (g, ∂g) for a = (X - t)"""
    ring = jet_ring(delta_field, 1, 0)
    a = JetIdeal.generate(ring, ["X[1,1] - t"])
    b = prolongation_ideal(a)
    upper = jet_ring(delta_field, 1, 1)
    assert b.ring == upper.poly_ring
    assert b.generators == (upper.parse_poly("X[1,1] - t"), upper.parse_poly("X'[1,1] - 1"))


def test_closure_hypothesis(delta_field):
    """Test ∂(a ∩ S_0) ⊂ a for a consistent and an inconsistent ideal"""
    ring = jet_ring(delta_field, 1, 1)
    good = JetIdeal.generate(ring, ["X'[1,1] - 2*t", "X[1,1] - t^2"])
    bad = JetIdeal.generate(ring, ["X'[1,1] - 1", "X[1,1] - t^2"])
    assert check_closure(good)
    assert not check_closure(bad)
    assert check_closure(JetIdeal.generate(jet_ring(delta_field, 1, 0), ["X[1,1] - t"]))


def test_consistent_prolongation(delta_field):
    """Test that a closed ideal prolongs to a proper ideal"""
    ring = jet_ring(delta_field, 1, 1)
    a = JetIdeal.generate(ring, ["X'[1,1] - 2*t", "X[1,1] - t^2"])
    cert = check_consistency(a)
    assert cert.hypothesis_ok
    assert not cert.trivial
    assert cert.witness is None
    upper = jet_ring(delta_field, 1, 2)
    expected = JetIdeal.generate(upper, ["X^(2)[1,1] - 2", "X'[1,1] - 2*t", "X[1,1] - t^2"])
    assert cert.basis_of_b == expected.basis
    assert "trivial: no" in cert.to_text()
    assert ("consistency.hypothesis_ok", "yes") in cert.to_records()


def test_inconsistent_prolongation(delta_field):
    """Test the unit witness when the closure hypothesis fails"""
    ring = jet_ring(delta_field, 1, 1)
    a = JetIdeal.generate(ring, ["X'[1,1] - 1", "X[1,1] - t^2"])
    cert = check_consistency(a)
    assert cert.hypothesis_ok is False
    assert cert.trivial
    assert cert.witness is not None
    assert cert.witness.replay()
    assert cert.witness.target.is_constant()
    text = cert.to_text()
    assert "closure hypothesis: no" in text
    assert "hence 1 ∈ b" in text
    assert "replay: ok" in text


def test_witness_replay_detects_tampering(qq_xy):
    """Test that a wrong derived step fails the replay"""
    x, y = qq_xy.gens
    one = qq_xy.one
    premises = (WitnessStep("p", x, (), "premise"), WitnessStep("q", y, (), "premise"))
    good = Witness(premises + (WitnessStep("w", x + y, ((one, "p"), (one, "q"))),), x + y)
    bad = Witness(premises + (WitnessStep("w", x - y, ((one, "p"), (one, "q"))),), x - y)
    dangling = Witness(premises + (WitnessStep("w", x, ((one, "r"),)),), x)
    assert good.replay()
    assert not bad.replay()
    assert not dangling.replay()
    assert good.to_lines()[-1] == "w = p + q = x + y"


def test_evaluation_checks(delta_field):
    """Test the consistency checks of jet evaluations"""
    with pytest.raises(InconsistentEvaluationError, match="∂ of the order-0 value"):
        JetEvaluation(delta_field, 1, {(1, 1, 0): "t", (1, 1, 1): "2"}, 1)
    with pytest.raises(InconsistentEvaluationError, match="no value"):
        JetEvaluation(delta_field, 1, {(1, 1, 0): "t"}, 1)
    with pytest.raises(SingularMatrixError):
        JetEvaluation.from_matrix(delta_field, [[0]], 1)


def test_evaluation_kernel(delta_field):
    """Test the kernel of the point X = t^2 + x"""
    ev = JetEvaluation.from_matrix(delta_field, [["t^2 + x"]], 2)
    kernel = evaluation_kernel(ev)
    ring = jet_ring(delta_field, 1, 2)
    assert kernel == JetIdeal.generate(ring, ["X^(2)[1,1] - 2", "X'[1,1] - 2*t", "X[1,1] - t^2 - x"])
    assert ev.annihilates(ring.parse("X[1,1]*X'[1,1] - 2*t*(t^2 + x)"))
    assert ev.evaluate(ring.parse("X[1,1]^2/det")) == delta_field.field.parse("t^2 + x")
    with pytest.raises(LevelError):
        evaluation_kernel(ev, 3)


def _random_point(dfield, rng, n, level):
    names = dfield.field.names
    while True:
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                terms = [
                    f"{rng.randint(-3, 3)}*{rng.choice(names)}^{rng.randint(0, 2)}"
                    for _ in range(rng.randint(1, 2))
                ]
                row.append(" + ".join(terms))
            rows.append(row)
        try:
            return JetEvaluation.from_matrix(dfield, rows, level)
        except SingularMatrixError:
            continue


def test_kernels_prolong_to_kernels(delta_field):
    """Test that the prolongation of a point kernel is the next kernel"""
    rng = random.Random(7)
    for i in range(24):
        n = 1 + i % 2
        level = i % 3
        ev = _random_point(delta_field, rng, n, level)
        low = evaluation_kernel(ev)
        upper = ev.extended(level + 1)
        assert check_closure(low)
        cert = check_consistency(low)
        assert not cert.trivial
        assert cert.hypothesis_ok
        assert all(upper.annihilates(g) for g in cert.b.generators)
        assert all(upper.annihilates(g) for g in cert.basis_of_b.basis)
        assert cert.basis_of_b == evaluation_kernel(upper).basis
        assert certify_extension(low, evaluation_kernel(upper))


def test_certify_extension(delta_field):
    """Test the extension certificate on matching and mismatching pairs"""
    low_ring = jet_ring(delta_field, 1, 0)
    high_ring = jet_ring(delta_field, 1, 1)
    q = JetIdeal.generate(low_ring, ["X[1,1] - t"])
    assert certify_extension(q, JetIdeal.generate(high_ring, ["X'[1,1] - 1", "X[1,1] - t"]))
    assert not certify_extension(q, JetIdeal.generate(high_ring, ["X'[1,1] - 5", "X[1,1] - t"]))
    assert not certify_extension(q, JetIdeal.generate(high_ring, ["X'[1,1]", "X[1,1] - t - 1"]))
    with pytest.raises(LevelError, match="must live at level 1"):
        certify_extension(q, q)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
