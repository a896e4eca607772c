"""
Expression parser shared by every text syntax in pvring.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom   := INT | NAME | JET | '(' expr ')'

JET tokens (``X[i,j]``, ``X'[i,j]``, ``X''[i,j]``, ``X^(k)[i,j]``) are only
recognised when the caller supplies a jet resolver. The parser is generic:
the values it builds come from caller callbacks and are combined with the
ordinary Python operators, so the same code serves rational functions,
polynomials over QQ or K, and jet-ring elements.
"""

import re
from typing import Any, Callable, List, Optional, Tuple

from ..exceptions import ExpressionSyntaxError, PVError

# Token kinds
INT = "INT"
NAME = "NAME"
JET = "JET"
OP = "OP"
END = "END"

_JET_RE = re.compile(
    r"X\s*(?P<ticks>'+|\^\s*\(\s*(?P<order>\d+)\s*\))?\s*"
    r"\[\s*(?P<row>\d+)\s*,\s*(?P<col>\d+)\s*\]"
)
_INT_RE = re.compile(r"\d+")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_OPERATORS = "+-*/^()"


class Token:
    """A lexical token with its source offset."""

    __slots__ = ("kind", "text", "offset", "value")

    def __init__(self, kind: str, text: str, offset: int, value: Any = None):
        self.kind = kind
        self.text = text
        self.offset = offset
        self.value = value

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.text!r}, {self.offset})"


def _line_col(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    start = text.rfind("\n", 0, offset) + 1
    return line, offset - start + 1


def tokenize(text: str, jets: bool = False) -> List[Token]:
    """
    Split expression text into tokens.

    Args:
        text: Source text
        jets: Recognise jet-variable tokens

    Returns:
        List of tokens terminated by an END token

    Raises:
        ExpressionSyntaxError: On an unexpected character
    """
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if jets and ch == "X":
            m = _JET_RE.match(text, pos)
            if m:
                ticks = m.group("ticks") or ""
                if m.group("order") is not None:
                    order = int(m.group("order"))
                else:
                    order = len(ticks)
                value = (int(m.group("row")), int(m.group("col")), order)
                tokens.append(Token(JET, m.group(0), pos, value))
                pos = m.end()
                continue
        if ch.isdigit():
            m = _INT_RE.match(text, pos)
            tokens.append(Token(INT, m.group(0), pos, int(m.group(0))))
            pos = m.end()
            continue
        m = _NAME_RE.match(text, pos)
        if m:
            tokens.append(Token(NAME, m.group(0), pos, m.group(0)))
            pos = m.end()
            continue
        if ch in _OPERATORS:
            tokens.append(Token(OP, ch, pos))
            pos += 1
            continue
        line, col = _line_col(text, pos)
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token(END, "", len(text)))
    return tokens


class ExpressionParser:
    """
    Recursive-descent parser over caller-supplied value constructors.

    Args:
        number: Builds a value from a non-negative Python int
        name: Resolves an identifier to a value (raise KeyError if unknown)
        jet: Resolves (row, col, order) to a value; None disables jet tokens
    """

    def __init__(
        self,
        number: Callable[[int], Any],
        name: Callable[[str], Any],
        jet: Optional[Callable[[int, int, int], Any]] = None,
    ):
        self._number = number
        self._name = name
        self._jet = jet
        self._text = ""
        self._tokens: List[Token] = []
        self._index = 0

    def parse(self, text: str) -> Any:
        """
        Parse a complete expression.

        Args:
            text: Expression text

        Returns:
            The value built from the callbacks

        Raises:
            ExpressionSyntaxError: On malformed input, unknown names or an
                arithmetic failure (for example division by zero)
        """
        self._text = text
        self._tokens = tokenize(text, jets=self._jet is not None)
        self._index = 0
        if self._peek().kind == END:
            self._fail("empty expression", self._peek())
        value = self._expr()
        if self._peek().kind != END:
            self._fail(f"unexpected {self._peek().text!r}", self._peek())
        return value

    # -- token helpers ---------------------------------------------------

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        tok = self._tokens[self._index]
        self._index += 1
        return tok

    def _is_op(self, symbol: str) -> bool:
        tok = self._peek()
        return tok.kind == OP and tok.text == symbol

    def _expect_op(self, symbol: str) -> Token:
        if not self._is_op(symbol):
            tok = self._peek()
            found = tok.text or "end of input"
            self._fail(f"expected {symbol!r}, found {found!r}", tok)
        return self._advance()

    def _fail(self, message: str, tok: Token):
        line, col = _line_col(self._text, tok.offset)
        raise ExpressionSyntaxError(message, line, col)

    def _apply(self, tok: Token, fn: Callable[[], Any]) -> Any:
        try:
            return fn()
        except (ZeroDivisionError, ValueError, ArithmeticError, PVError) as exc:
            if isinstance(exc, ExpressionSyntaxError):
                raise
            self._fail(str(exc) or type(exc).__name__, tok)

    # -- grammar ---------------------------------------------------------

    def _expr(self) -> Any:
        value = self._term()
        while self._is_op("+") or self._is_op("-"):
            tok = self._advance()
            rhs = self._term()
            if tok.text == "+":
                value = self._apply(tok, lambda a=value, b=rhs: a + b)
            else:
                value = self._apply(tok, lambda a=value, b=rhs: a - b)
        return value

    def _term(self) -> Any:
        value = self._unary()
        while self._is_op("*") or self._is_op("/"):
            tok = self._advance()
            rhs = self._unary()
            if tok.text == "*":
                value = self._apply(tok, lambda a=value, b=rhs: a * b)
            else:
                value = self._apply(tok, lambda a=value, b=rhs: a / b)
        return value

    def _unary(self) -> Any:
        if self._is_op("-"):
            tok = self._advance()
            operand = self._unary()
            return self._apply(tok, lambda a=operand: -a)
        if self._is_op("+"):
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Any:
        base = self._atom()
        if self._is_op("^"):
            tok = self._advance()
            exponent = self._exponent()
            return self._apply(tok, lambda a=base, e=exponent: a ** e)
        return base

    def _exponent(self) -> int:
        parenthesised = False
        if self._is_op("("):
            self._advance()
            parenthesised = True
        sign = 1
        if self._is_op("-"):
            self._advance()
            sign = -1
        tok = self._peek()
        if tok.kind != INT:
            self._fail("exponent must be an integer", tok)
        self._advance()
        if parenthesised:
            self._expect_op(")")
        return sign * tok.value

    def _atom(self) -> Any:
        tok = self._peek()
        if tok.kind == INT:
            self._advance()
            return self._apply(tok, lambda: self._number(tok.value))
        if tok.kind == JET:
            self._advance()
            row, col, order = tok.value
            return self._apply(tok, lambda: self._jet(row, col, order))
        if tok.kind == NAME:
            self._advance()
            try:
                return self._name(tok.value)
            except KeyError:
                self._fail(f"unknown name {tok.value!r}", tok)
        if self._is_op("("):
            self._advance()
            value = self._expr()
            self._expect_op(")")
            return value
        found = tok.text or "end of input"
        self._fail(f"unexpected {found!r}", tok)
