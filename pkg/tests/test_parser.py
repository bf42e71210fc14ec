# tests/test_parser.py
import pytest

from quotfib.algebra import parse_poly, split_top_level, tokenize
from quotfib.core import PolynomialParseError, UndeclaredVariableError

XY = ("x", "y")


def test_tokens_carry_positions():
    tokens = tokenize("x + 12*y")
    assert [(t.kind, t.text, t.position) for t in tokens] == [
        ("name", "x", 0), ("op", "+", 2), ("number", "12", 4), ("op", "*", 6), ("name", "y", 7), ("end", "", 8),
    ]


def test_parse_precedence(qq):
    assert str(parse_poly("(x + y)^2", XY, qq)) == "x^2 + 2*x*y + y^2"
    assert str(parse_poly("-x + 1/2", XY, qq)) == "-x + 1/2"
    assert str(parse_poly("2*x^2*3", XY, qq)) == "6*x^2"
    assert parse_poly(" x -  x ", XY, qq).is_zero()


@pytest.mark.parametrize("text, position", [
    ("2x", 1),
    ("x y", 2),
    ("x^-1", 2),
    ("(x + y", 6),
    ("x +", 3),
    ("1/0", 2),
    ("x $ y", 2),
    ("", 0),
])
def test_syntax_errors_report_position(qq, text, position):
    with pytest.raises(PolynomialParseError) as info:
        parse_poly(text, XY, qq)
    assert info.value.position == position


def test_undeclared_variable(qq):
    with pytest.raises(UndeclaredVariableError) as info:
        parse_poly("x + z", XY, qq)
    assert info.value.name == "z"


def test_literal_not_in_prime_field(gf5):
    with pytest.raises(PolynomialParseError):
        parse_poly("x/5", XY, gf5)
    with pytest.raises(PolynomialParseError):
        parse_poly("1/5", XY, gf5)
    assert parse_poly("1/2", XY, gf5) == 3


def test_split_top_level():
    assert split_top_level("(x^2, (y + 1)*x)") == ["x^2", "(y + 1)*x"]
    assert split_top_level("(a) + (b)") == ["(a) + (b)"]
    assert split_top_level("a, b ,c") == ["a", "b", "c"]
    with pytest.raises(PolynomialParseError):
        split_top_level("x,,y")
    with pytest.raises(PolynomialParseError):
        split_top_level("(x, y")
