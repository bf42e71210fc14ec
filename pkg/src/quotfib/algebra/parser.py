# quotfib/algebra/parser.py
"""
Polynomial Expression Parser
============================
Recursive-descent parser for the polynomial expression grammar:

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := var | rational | '(' expr ')'
    rational := int ('/' uint)?
    var      := letter (letter|digit|'_')*

Whitespace is insignificant. Implicit multiplication ("2a", "a b") is a
syntax error. Every error carries the character position of the offending
token.
"""

from fractions import Fraction
from typing import List, NamedTuple, Sequence
import logging
import re

from ..core.errors import NotAUnitError, PolynomialParseError, UndeclaredVariableError
from .polynomials import MultiPoly
from .scalars import FieldDescriptor

logger = logging.getLogger(__name__)

_TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class Token(NamedTuple):
    kind: str       # "number", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; unknown characters are a parse error."""
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN_PATTERN.match(text, position)
        if not match:
            raise PolynomialParseError(f"Unexpected character {text[position]!r}", text, position)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Single-use parser over a token list."""

    def __init__(self, text: str, vars: Sequence[str], field: FieldDescriptor):
        self.text = text
        self.vars = tuple(vars)
        self.field = field
        self.tokens = tokenize(text)
        self.index = 0

    # ------------------------------------------------------------------ token helpers

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def error(self, message: str, token: Token = None) -> PolynomialParseError:
        token = token or self.current
        return PolynomialParseError(message, self.text, token.position)

    def describe(self, token: Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)

    # ------------------------------------------------------------------ grammar

    def parse(self) -> MultiPoly:
        if self.current.kind == "end":
            raise self.error("Empty expression")
        result = self.expr()
        if self.current.kind != "end":
            raise self.error(f"Unexpected {self.describe(self.current)}")
        return result

    def expr(self) -> MultiPoly:
        negate = False
        if self.at_op("+", "-"):
            negate = self.advance().text == "-"
        result = self.term()
        if negate:
            result = -result
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while self.at_op("*"):
            self.advance()
            result = result * self.factor()
        if self.current.kind in ("name", "number") or self.at_op("("):
            raise self.error(f"Missing '*' before {self.describe(self.current)} (implicit multiplication is not supported)")
        return result

    def factor(self) -> MultiPoly:
        result = self.base()
        if self.at_op("^"):
            self.advance()
            token = self.current
            if token.kind != "number":
                raise self.error(f"Expected a non-negative integer exponent, found {self.describe(token)}")
            self.advance()
            result = result ** int(token.text)
        return result

    def base(self) -> MultiPoly:
        token = self.current
        if token.kind == "name":
            self.advance()
            if token.text not in self.vars:
                raise UndeclaredVariableError(token.text, self.vars)
            return MultiPoly.variable(token.text, self.vars, self.field)
        if token.kind == "number":
            return self.rational()
        if self.at_op("("):
            self.advance()
            result = self.expr()
            if not self.at_op(")"):
                raise self.error(f"Expected ')', found {self.describe(self.current)}")
            self.advance()
            return result
        raise self.error(f"Expected a variable, number or '(', found {self.describe(token)}")

    def rational(self) -> MultiPoly:
        start = self.advance()
        value = Fraction(int(start.text))
        if self.at_op("/"):
            self.advance()
            token = self.current
            if token.kind != "number":
                raise self.error(f"Expected a denominator, found {self.describe(token)}")
            self.advance()
            if int(token.text) == 0:
                raise self.error("Zero denominator", token)
            value = value / int(token.text)
        try:
            return MultiPoly.constant(value, self.vars, self.field)
        except NotAUnitError:
            raise self.error(f"Literal {value} is not valid in {self.field}", start)


def parse_poly(text: str, vars: Sequence[str], field: FieldDescriptor) -> MultiPoly:
    """Parse a polynomial expression over the declared variables."""
    poly = _Parser(text, vars, field).parse()
    logger.debug(f"Parsed {text!r} as {poly}")
    return poly


def split_top_level(text: str) -> List[str]:
    """
    Split "(e1, e2, ...)" or "e1, e2" into expression strings at commas
    outside parentheses.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        depth = 0
        wraps = True
        for index, char in enumerate(body):
            depth += {"(": 1, ")": -1}.get(char, 0)
            if depth == 0 and index < len(body) - 1:
                wraps = False
                break
        if wraps:
            body = body[1:-1]

    parts, depth, start = [], 0, 0
    for index, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise PolynomialParseError("Unbalanced ')'", text, index)
        elif char == "," and depth == 0:
            parts.append(body[start:index].strip())
            start = index + 1
    if depth != 0:
        raise PolynomialParseError("Unbalanced '('", text, len(text))
    parts.append(body[start:].strip())
    if any(not part for part in parts):
        raise PolynomialParseError("Empty entry in tuple", text, 0)
    return parts
