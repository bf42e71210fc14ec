# tests/test_scalars.py
from fractions import Fraction

import pytest
from pydantic import ValidationError

from quotfib.algebra import FieldKind, Scalar, is_prime, parse_field, prime_field, rationals
from quotfib.core import FieldMismatchError, NotAUnitError, QuotfibError


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_descriptors_are_cached_and_validated():
    assert prime_field(5) is prime_field(5)
    assert rationals().kind == FieldKind.RATIONALS
    with pytest.raises(ValidationError):
        prime_field(4)
    with pytest.raises(ValidationError):
        prime_field(65537)


@pytest.mark.parametrize("text, expected", [
    ("QQ", "QQ"), ("q", "QQ"), ("0", "QQ"), ("5", "GF(5)"), ("GF(7)", "GF(7)"), ("gf(3)", "GF(3)"),
])
def test_parse_field(text, expected):
    assert str(parse_field(text)) == expected


def test_parse_field_rejects_garbage():
    with pytest.raises(QuotfibError):
        parse_field("reals")


def test_rational_arithmetic_is_exact(qq):
    half = qq(Fraction(1, 2))
    assert half + half == 1
    assert (half ** -2).value == Fraction(4)
    assert (1 - half) / 3 == Fraction(1, 6)
    assert str(-half) == "-1/2"


def test_prime_field_representatives(gf5):
    assert gf5(-1).value == 4
    assert gf5(Fraction(1, 2)).value == 3
    assert gf5(3) == 8
    assert gf5(2).inverse() == 3
    assert [s.value for s in gf5.elements()] == [0, 1, 2, 3, 4]


def test_denominator_divisible_by_p(gf5):
    with pytest.raises(NotAUnitError):
        Scalar(Fraction(1, 5), gf5)
    assert gf5(1) != Fraction(1, 5)


def test_zero_has_no_inverse(qq, gf3):
    with pytest.raises(NotAUnitError):
        qq(0).inverse()
    with pytest.raises(NotAUnitError):
        gf3(3) / gf3(6)


def test_mixing_fields_raises(gf3, gf5):
    with pytest.raises(FieldMismatchError):
        gf3(1) + gf5(1)
    with pytest.raises(FieldMismatchError):
        gf5(gf3(1))


def test_fermat_on_random_units(gf5, rng):
    for _ in range(20):
        a = gf5(rng.randrange(1, 5))
        assert a ** 4 == 1
        assert a * a.inverse() == 1


def test_floats_are_rejected(qq, gf5):
    with pytest.raises(QuotfibError):
        qq(0.1)
    with pytest.raises(QuotfibError):
        gf5(2.0)
    assert qq(Fraction(1, 10)) == Fraction(1, 10)


def test_hash_agrees_with_equality(qq, gf5):
    assert hash(qq(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert hash(qq(4)) == hash(4)
    assert hash(gf5(7)) == hash(2)
    assert Fraction(1, 2) in {qq(Fraction(1, 2))}
