"""
Tests for the Buchberger kernel, checked against sympy's groebner.
"""

import random

import pytest
import sympy

from pvring.config import ComputationBudget
from pvring.exceptions import BudgetExhaustedError
from pvring.groebner import IdealPresentation, buchberger, normal_form
from pvring.polyring import RATIONALS, PolyRing, TermOrder


def _sympy_basis(polys, names, order):
    """Reduced basis from sympy, each element scaled to lex-monic form"""
    symbols = sympy.symbols(names)
    exprs = [sympy.sympify(p.to_text().replace("^", "**")) for p in polys]
    G = sympy.groebner(exprs, *symbols, order=order, domain="QQ")
    return {sympy.Poly(g, *symbols, domain="QQ").monic().as_expr() for g in G.exprs}


def _own_basis(G, names):
    symbols = sympy.symbols(names)
    return {
        sympy.Poly(sympy.sympify(g.to_text().replace("^", "**")), *symbols, domain="QQ").monic().as_expr()
        for g in G.basis
    }


def _random_poly(ring, rng, terms=3, degree=2):
    total = ring.zero
    for _ in range(terms):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(ring.nvars)] += 1
        total = total + ring.monomial(tuple(exps), rng.choice([-3, -2, -1, 1, 2, 3]))
    return total


def test_grevlex_basis_text(qq_xy):
    """Test the canonical reduced basis of (x^2 + y^2, x*y)"""
    G = buchberger(IdealPresentation(qq_xy, ["x^2 + y^2", "x*y"]))
    assert G.to_text() == "y^3, x^2 + y^2, x*y"
    assert not G.is_trivial()
    assert G.is_zero_dimensional()


def test_lex_basis_text():
    """Test a lex basis that solves for x and y in terms of z"""
    ring = PolyRing(["x", "y", "z"], RATIONALS, TermOrder.lex())
    G = buchberger(IdealPresentation(ring, ["x - y^2", "y - z^3"]))
    assert G.to_text() == "x - z^6, y - z^3"


def test_unit_and_zero_ideal(qq_xy):
    """Test the unit ideal and the zero ideal"""
    unit = buchberger(IdealPresentation(qq_xy, ["x*y - 1", "x"]))
    assert unit.is_trivial()
    assert unit.to_text() == "1"

    zero = buchberger(IdealPresentation(qq_xy, []))
    assert zero.is_zero_ideal()
    assert zero.to_text() == "0"
    assert not zero.contains(qq_xy.parse("x"))


def test_basis_is_monic_and_reduced(qq_xyz):
    """Test that no basis term is divisible by another leading monomial"""
    G = buchberger(IdealPresentation(qq_xyz, ["2*x*y - z", "3*y^2 - x", "x*z - 1/2"]))
    for g in G.basis:
        assert g.LC == 1
        others = [h for h in G.basis if h is not g]
        remainder, _ = normal_form(g, others)
        assert remainder == g


def test_matches_sympy_grevlex(qq_xyz):
    """Test agreement with sympy on a fixed three-variable ideal"""
    polys = [qq_xyz.parse(t) for t in ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]]
    G = buchberger(IdealPresentation(qq_xyz, polys))
    assert _own_basis(G, "x y z") == _sympy_basis(polys, "x y z", "grevlex")


def test_matches_sympy_random_ideals():
    """Test agreement with sympy on seeded random ideals under both orders"""
    rng = random.Random(20240611)
    for order_name in ("grevlex", "lex"):
        ring = PolyRing(["x", "y", "z"], RATIONALS, TermOrder.from_name(order_name))
        for _ in range(12):
            polys = [_random_poly(ring, rng) for _ in range(rng.randint(2, 3))]
            polys = [p for p in polys if not p.is_zero()]
            if not polys:
                continue
            G = buchberger(IdealPresentation(ring, polys))
            assert _own_basis(G, "x y z") == _sympy_basis(polys, "x y z", order_name)
            for p in polys:
                assert G.contains(p)


def test_standard_monomials(qq_xy):
    """Test the staircase of a zero-dimensional ideal"""
    G = buchberger(IdealPresentation(qq_xy, ["x^2 + y^2", "x*y"]))
    assert G.standard_monomials() == ((0, 2), (1, 0), (0, 1), (0, 0))


def test_trace_lines(qq_xy):
    """Test that the trace reports each S-pair reduction"""
    lines = []
    buchberger(IdealPresentation(qq_xy, ["x^2 + y^2", "x*y"]), trace=lines.append)
    assert lines
    assert all(line.startswith("S(") for line in lines)
    assert any("-> g" in line for line in lines)


def test_reduction_budget():
    """Test that a tiny reduction budget raises instead of answering"""
    ring = PolyRing(["x", "y", "z"], RATIONALS)
    ideal = IdealPresentation(ring, ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"])
    with pytest.raises(BudgetExhaustedError, match="S-pair budget"):
        buchberger(ideal, budget=ComputationBudget(max_reductions=1))


def test_degree_cap(qq_xy):
    """Test that a basis element above the degree cap raises"""
    ideal = IdealPresentation(qq_xy, ["x^2 + y^2", "x*y"])
    with pytest.raises(BudgetExhaustedError, match="degree cap"):
        buchberger(ideal, budget=ComputationBudget(max_degree=2))


def test_budget_is_shared():
    """Test that one budget counts the reductions of several computations"""
    ring = PolyRing(["x", "y"], RATIONALS)
    budget = ComputationBudget()
    first = buchberger(IdealPresentation(ring, ["x^2 + y^2", "x*y"]), budget=budget)
    spent = budget.reductions
    assert spent == first.reductions > 0
    buchberger(IdealPresentation(ring, ["x^2 - y", "y^2 - x"]), budget=budget)
    assert budget.reductions > spent


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
