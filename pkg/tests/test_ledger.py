# tests/test_ledger.py
import pytest

from quotfib.birational import (
    discrepancy_ledger,
    inverse_ledger,
    inverse_map,
    ledger_from_map,
    phi_pullback_table,
    phi_standard,
)
from quotfib.core import LedgerError


def test_ledger_from_the_map():
    report = ledger_from_map()
    assert report.total == "K_X + A2 + A4 + G"
    assert report.degree_identity == "-4 + 0 + 1 + 1 + 2 = 0"
    assert report.jacobian_orders == {"A1": -6, "A4": 2}
    assert report.discrepancies == {"A1": -6, "A4": -2}
    assert report.constraint_ok and report.passed
    assert report.require() is report


def test_ledger_from_coefficients():
    report = discrepancy_ledger(phi_pullback_table(), {"A1": -6, "A4": -2})
    assert report.total == "K_X + A2 + A4 + G"
    assert report.coefficients == {"K_X": 1, "A2": 1, "A4": 1, "G": 1}
    assert report.to_report()["constraint"] == "A1 + A4: 1 = 1"


def test_wrong_coefficients_fail_the_ledger():
    report = discrepancy_ledger(phi_pullback_table(), {"A1": -5, "A4": -2})
    assert not report.degree_ok
    assert not report.constraint_ok
    assert not report.passed
    with pytest.raises(LedgerError):
        report.require()
    with pytest.raises(LedgerError):
        discrepancy_ledger(phi_pullback_table(), {"Z9": 1})


def test_inverse_ledger():
    report = inverse_ledger()
    assert report.total == "K_Y + H2 + H4 + P"
    assert report.passed


def test_inverse_map_has_the_same_shape():
    assert [str(c) for c in inverse_map().coords] == [
        str(c).replace("m", "l") for c in phi_standard().coords
    ]


def test_identity_inputs_fail_the_constraint():
    report = discrepancy_ledger(phi_pullback_table(), {"A1": 0, "A4": 0})
    assert report.coefficients["A1"] == 6
    assert report.coefficients["A4"] == 3
    assert not report.constraint_ok
    assert report.to_report()["constraint"] == "A1 + A4: 9 ≠ 1"
    assert not report.passed


def test_raw_jacobian_orders_are_not_coefficients():
    raw = discrepancy_ledger(phi_pullback_table(), {"A1": -6, "A4": 2}, jacobian_orders={"A1": -6, "A4": 2})
    assert raw.to_report()["constraint"] == "A1 + A4: 5 ≠ 1"
    assert raw.jacobian_orders == {"A1": -6, "A4": 2}
    converted = discrepancy_ledger(phi_pullback_table(), {"A1": -6, "A4": -2})
    assert converted.passed
