# quotfib/__init__.py
"""
quotfib
=======

Exact algebra and finite-field oracles for stable pairs on P^1 and the
Quot-scheme fibres Q_n = Quot(O^2 / k[t]/<t^n>).

Public API:
    Subpackages:
        - quotfib.algebra: scalars, truncated and multivariate polynomials
        - quotfib.modules: exact linear algebra and t-invariant subspaces
        - quotfib.census: brute-force census and closed-form counts
        - quotfib.charts: chart equations, elimination and probes
        - quotfib.birational: the involution of P^3 and its discrepancy ledger
        - quotfib.pairs: stable-pair matrices, invariants and orbits
        - quotfib.checks: acceptance checks as plugins
        - quotfib.session: report assembly and the check runner

    Entry point:
        - quotfib.cli.main: the `quotfib` console script
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
