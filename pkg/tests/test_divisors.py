# tests/test_divisors.py
from random import Random

import pytest
from pydantic import ValidationError

from quotfib.algebra import parse_poly
from quotfib.birational import (
    SOURCE_VARS,
    Divisor,
    PrimeDivisor,
    line_vanishing_order,
    parse_divisor,
    phi_pullback_table,
    phi_standard,
    pullback_divisor,
    spot_check_pullback,
    standard_primes,
)
from quotfib.checks.golden import PHI_PULLBACKS_FILE, golden_table
from quotfib.core import DEFAULT_SEED, LedgerError


@pytest.fixture
def primes():
    return standard_primes()


def test_divisor_arithmetic(primes):
    a1, a4, g = primes["A1"], primes["A4"], primes["G"]
    d = Divisor.of(a1, 2) + Divisor.of(a4)
    assert str(d) == "2A1 + A4"
    assert d.degree() == 3
    assert str(d - Divisor.of(a1, 2)) == "A4"
    assert (d - d).is_zero() and str(d - d) == "0"
    assert str(-1 * Divisor.of(g) + Divisor.of(primes["K_X"])) == "K_X - G"
    assert (2 * d).coefficient("A1") == 4


def test_parse_divisor_round_trip(primes):
    for text in ["2A1 + A4", "K_X - A1", "K_X + A2 + A4 + G", "-3A1", "0"]:
        assert str(parse_divisor(text, primes)) == text
    with pytest.raises(LedgerError):
        parse_divisor("A9", primes)
    with pytest.raises(LedgerError):
        parse_divisor("2*A1", primes)


def test_prime_divisor_validation(qq):
    with pytest.raises(ValidationError):
        PrimeDivisor(name="A1", degree=2, equation=parse_poly("m1", SOURCE_VARS, qq))
    with pytest.raises(ValidationError):
        PrimeDivisor(name="B", degree=2, equation=parse_poly("m1^2 + m2", SOURCE_VARS, qq))
    assert primes_are_canonical(standard_primes())


def primes_are_canonical(registry):
    return registry["K_X"].is_canonical and not registry["A1"].is_canonical and registry["K_Y"].degree == -4


def test_clashing_names_rejected(primes):
    with pytest.raises(LedgerError):
        Divisor([(primes["A1"], 1), (PrimeDivisor(name="A1", degree=2), 1)])


def test_phi_pullbacks_match_the_golden_table(primes):
    table = phi_pullback_table()
    golden = dict(golden_table(PHI_PULLBACKS_FILE))
    assert {name: str(divisor) for name, divisor in table.items()} == golden
    assert table["H1"] == parse_divisor("2A1 + A4", primes)
    assert all(divisor.degree() == 3 for divisor in table.values())


def test_incomplete_candidate_list(primes):
    with pytest.raises(LedgerError):
        pullback_divisor(phi_standard(), primes["H3"], [primes["A1"], primes["A4"]])
    with pytest.raises(LedgerError):
        pullback_divisor(phi_standard(), primes["K_Y"], [primes["A1"]])


def test_line_vanishing_order(qq):
    square = parse_poly("m1^2*m4", SOURCE_VARS, qq)
    assert line_vanishing_order(square, (0, 1, 1, 1), (1, 0, 0, 0), 5) == 2
    assert line_vanishing_order(square, (0, 1, 1, 1), (0, 1, 0, 0), 5) is None
    assert line_vanishing_order(square, (1, 1, 1, 1), (1, 0, 0, 0), 5) == 0


def test_spot_check_pullback(primes):
    phi = phi_standard()
    table = phi_pullback_table()
    rng = Random(DEFAULT_SEED)
    for name, divisor in table.items():
        assert spot_check_pullback(phi, primes[name], divisor, 7, samples=20, rng=rng)
    overclaimed = Divisor.of(primes["A1"], 3)
    assert not spot_check_pullback(phi, primes["H1"], overclaimed, 7, samples=20, rng=rng)
