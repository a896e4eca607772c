"""
Tests for the shared expression parser.
"""

from fractions import Fraction

import pytest

from pvring.exceptions import ExpressionSyntaxError
from pvring.utils import ExpressionParser, tokenize
from pvring.utils.expressions import END, JET, NAME


def rational_parser(jets=False):
    names = {"a": Fraction(3), "b": Fraction(1, 2)}
    jet = (lambda row, col, order: Fraction(100 * row + 10 * col + order)) if jets else None
    return ExpressionParser(Fraction, names.__getitem__, jet)


def test_tokenize_jets():
    """Test jet tokens in every spelling"""
    tokens = tokenize("X[1,2] + X'[2,1] - X''[1,1]*X^(3)[2,2]", jets=True)
    jets = [t.value for t in tokens if t.kind == JET]
    assert jets == [(1, 2, 0), (2, 1, 1), (1, 1, 2), (2, 2, 3)]
    assert tokens[-1].kind == END


def test_tokenize_without_jets():
    """Test that X is a plain name when jets are off"""
    tokens = tokenize("X + x1", jets=False)
    assert [t.kind for t in tokens if t.kind == NAME] == [NAME, NAME]


def test_precedence():
    """Test operator precedence and associativity"""
    parse = rational_parser().parse
    assert parse("1 + 2*3") == 7
    assert parse("(1 + 2)*3") == 9
    assert parse("8/2/2") == 2
    assert parse("-2^2") == -4
    assert parse("2^-1") == Fraction(1, 2)
    assert parse("2^(-2)") == Fraction(1, 4)
    assert parse("a*b - +1") == Fraction(1, 2)


def test_jet_values():
    """Test the jet callback"""
    assert rational_parser(jets=True).parse("X'[1,2] - 1") == 120


def test_errors_carry_position():
    """Test messages and positions of syntax errors"""
    parse = rational_parser().parse
    with pytest.raises(ExpressionSyntaxError, match="line 1, column 2") as excinfo:
        parse("1/0")
    assert excinfo.value.column == 2
    with pytest.raises(ExpressionSyntaxError, match="unknown name 'c'"):
        parse("a + c")
    with pytest.raises(ExpressionSyntaxError, match="end of input") as excinfo:
        parse("a + ")
    assert excinfo.value.column == 5
    with pytest.raises(ExpressionSyntaxError, match="exponent must be an integer"):
        parse("a^b")
    with pytest.raises(ExpressionSyntaxError, match="empty expression"):
        parse("   ")
    with pytest.raises(ExpressionSyntaxError, match="unexpected character '%'") as excinfo:
        parse("1\n+ %")
    assert (excinfo.value.line, excinfo.value.column) == (2, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
