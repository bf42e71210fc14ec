# quotfib/birational/__init__.py
"""
Birational Involution of P^3
============================

The degree-3 map (m1^2 m4 : -m1 m2 m4 : m2^2 m4 - m1 m3 m4 : m1^3), its
composition with itself, divisor pullbacks, Jacobian orders and the formal
ledger of the log canonical class.

Public API:
    Maps:
        - ProjectiveMap, phi_standard(), identity_map(), compose(f, g)
        - jacobian_order(f, prime, s, t), discrepancy_coefficient(f, prime, s, t)

    Divisors:
        - PrimeDivisor, Divisor, standard_primes()
        - pullback_divisor(f, prime, candidates), spot_check_pullback(...)

    Ledger:
        - discrepancy_ledger(pullbacks, discrepancies) -> LedgerReport
        - ledger_from_map(), inverse_ledger(), phi_pullback_table()

    Cramer:
        - adjugate_compose_check(mat) -> Verdict
"""

from .maps import (
    SOURCE_VARS,
    TARGET_VARS,
    ProjectiveMap,
    compose,
    discrepancy_coefficient,
    identity_map,
    jacobian,
    jacobian_order,
    known_primes,
    normalize_point,
    phi_standard,
    valid_charts,
)
from .divisors import (
    Divisor,
    PrimeDivisor,
    canonical_class,
    conic_divisor,
    hyperplanes,
    line_vanishing_order,
    parse_divisor,
    pullback_divisor,
    spot_check_pullback,
    standard_primes,
)
from .ledger import (
    LedgerReport,
    discrepancy_ledger,
    inverse_ledger,
    inverse_map,
    ledger_from_map,
    map_ledger,
    phi_pullback_table,
)
from .adjugate import (
    adjugate,
    adjugate_compose_check,
    determinant,
    random_form,
    random_form_matrix,
)

__all__ = [
    "SOURCE_VARS",
    "TARGET_VARS",
    "ProjectiveMap",
    "compose",
    "discrepancy_coefficient",
    "identity_map",
    "jacobian",
    "jacobian_order",
    "known_primes",
    "normalize_point",
    "phi_standard",
    "valid_charts",
    "Divisor",
    "PrimeDivisor",
    "canonical_class",
    "conic_divisor",
    "hyperplanes",
    "line_vanishing_order",
    "parse_divisor",
    "pullback_divisor",
    "spot_check_pullback",
    "standard_primes",
    "LedgerReport",
    "discrepancy_ledger",
    "inverse_ledger",
    "inverse_map",
    "ledger_from_map",
    "map_ledger",
    "phi_pullback_table",
    "adjugate",
    "adjugate_compose_check",
    "determinant",
    "random_form",
    "random_form_matrix",
]
