import pytest

from pvring.basefield import BaseField
from pvring.exceptions import ExpressionSyntaxError, RingMismatchError
from pvring.polyring import RATIONALS, PolyRing, TermOrder


def test_parse_and_print(qq_xy):
    """Test the canonical printed form under grevlex"""
    f = qq_xy.parse("y^3 + x*y + x^2 - 1/2")
    assert f.to_text() == "y^3 + x^2 + x*y - 1/2"
    assert qq_xy.parse(f.to_text()) == f


def test_arithmetic(qq_xy):
    """Test ring arithmetic"""
    x, y = qq_xy.gens
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x + y) ** 2 == qq_xy.parse("x^2 + 2*x*y + y^2")
    assert (x - x).is_zero()
    assert (2 * x) / 2 == x
    with pytest.raises(ZeroDivisionError):
        x / y


def test_leading_data(qq_xy):
    """Test leading monomial, coefficient and degree"""
    f = qq_xy.parse("3*x*y^2 - x^3 + y")
    assert f.LM == (3, 0)  # grevlex: x^3 > x*y^2
    assert f.LC == -1
    assert f.degree() == 3
    assert f.degree_in("x") == 3
    assert f.support() == ("x", "y")


def test_monic_and_primitive(qq_xy):
    """Test normalisations over QQ"""
    f = qq_xy.parse("2/3*x - 4/9")
    assert f.monic() == qq_xy.parse("x - 2/3")
    assert f.primitive() == qq_xy.parse("3*x - 2")
    assert (-f).primitive() == qq_xy.parse("3*x - 2")


def test_exact_quotient(qq_xy):
    """Test exact division and its failure"""
    x, y = qq_xy.gens
    assert (x ** 2 - y ** 2).exact_quotient(x - y) == x + y
    assert (x ** 2 + y).exact_quotient(x) is None


def test_diff_compose_evaluate(qq_xy):
    """Test derivative, substitution and evaluation"""
    x, y = qq_xy.gens
    f = x ** 2 * y + 3 * y
    assert f.diff("x") == 2 * x * y
    assert f.compose({"x": y + 1}) == (y + 1) ** 2 * y + 3 * y
    assert f.evaluate({"x": 2, "y": 1}) == 7


def test_change_ring(qq_xy, qq_xyz):
    """Test moving polynomials between rings by variable name"""
    f = qq_xy.parse("x*y + 1")
    g = f.change_ring(qq_xyz)
    assert g.ring == qq_xyz
    assert g.to_text() == "x*y + 1"
    with pytest.raises(RingMismatchError):
        qq_xyz.parse("z").change_ring(qq_xy)


def test_mixed_rings_rejected(qq_xy, qq_xyz):
    """Test that polynomials of different rings do not mix"""
    with pytest.raises(RingMismatchError):
        qq_xy.gen("x") + qq_xyz.gen("x")


def test_field_coefficients():
    """Test polynomials over K = QQ(t) with field names in coefficients"""
    K = BaseField(["t"])
    R = PolyRing(["x"], K)
    f = R.parse("x^2 - t^2")
    assert f.exact_quotient(R.parse("x - t")) == R.parse("x + t")
    assert R.parse("x/t").to_text() == "(1)/(t)*x"
    assert R.parse("(t + 1)*x").to_text() == "(t + 1)*x"


def test_subring_and_extension(qq_xyz):
    """Test derived rings"""
    sub = qq_xyz.subring(["y", "z"])
    assert sub.variables == ("y", "z")
    ext = qq_xyz.extend_front(["w"])
    assert ext.variables == ("w", "x", "y", "z")
    assert qq_xyz.fresh_name("x") != "x"


def test_unknown_name(qq_xy):
    """Test parse errors for names outside the ring"""
    with pytest.raises(ExpressionSyntaxError):
        qq_xy.parse("x + q")


def test_lex_printing():
    """Test term order of printing under lex"""
    R = PolyRing(["x", "y"], RATIONALS, TermOrder.lex())
    assert R.parse("y^5 + x").to_text() == "x + y^5"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
