# tests/test_truncated.py
import pytest

from quotfib.algebra import TruncatedPoly, trunc_invert, trunc_mul
from quotfib.core import FieldMismatchError, NotAUnitError, ShapeMismatchError


def test_geometric_series_inverse(qq):
    p = TruncatedPoly([1, 1, 0, 0], qq)
    assert p.invert() == TruncatedPoly([1, -1, 1, -1], qq)
    assert p * p.invert() == TruncatedPoly.one(4, qq)
    assert p ** -1 == trunc_invert(p)


def test_product_truncates(qq):
    t = TruncatedPoly.monomial(1, 3, qq)
    assert t * t == TruncatedPoly.monomial(2, 3, qq)
    assert (t * t * t).is_zero()
    assert TruncatedPoly.monomial(5, 3, qq).is_zero()


def test_non_unit_inverse_raises(qq):
    with pytest.raises(NotAUnitError):
        TruncatedPoly([0, 1, 0], qq).invert()


def test_valuation_and_shift(qq):
    assert TruncatedPoly([0, 0, 3, 1], qq).valuation() == 2
    assert TruncatedPoly.zero(4, qq).valuation() == 4
    assert TruncatedPoly([1, 1, 0, 0], qq).shift(3) == TruncatedPoly.monomial(3, 4, qq)


def test_parse_truncates_high_powers(qq, gf5):
    assert TruncatedPoly.parse("1 + 2*t + t^5", 3, qq) == TruncatedPoly([1, 2, 0], qq)
    assert TruncatedPoly.parse("-t", 2, gf5) == TruncatedPoly([0, 4], gf5)
    assert TruncatedPoly.parse("1 + s^2", 3, qq, var="s") == TruncatedPoly([1, 0, 1], qq)


def test_from_values_pads(qq):
    assert TruncatedPoly.from_values([1], 3, qq) == TruncatedPoly([1, 0, 0], qq)
    assert TruncatedPoly.from_values([1, 2, 3, 4], 2, qq) == TruncatedPoly([1, 2], qq)


def test_incompatible_operands(qq, gf5):
    with pytest.raises(ShapeMismatchError):
        TruncatedPoly([1, 0], qq) + TruncatedPoly([1, 0, 0], qq)
    with pytest.raises(FieldMismatchError):
        trunc_mul(TruncatedPoly([1, 0], qq), TruncatedPoly([1, 0], gf5))
    with pytest.raises(ShapeMismatchError):
        TruncatedPoly([], qq)


def test_random_units_invert(gf5, rng):
    for _ in range(30):
        n = rng.randrange(1, 6)
        p = TruncatedPoly([rng.randrange(1, 5)] + [rng.randrange(5) for _ in range(n - 1)], gf5)
        assert p * p.invert() == TruncatedPoly.one(n, gf5)
        assert p.invert().invert() == p
