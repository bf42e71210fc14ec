# quotfib/census/__init__.py
"""
Finite-Field Census
===================

Brute-force counts of t-invariant subspaces of (F_q[t]/<t^n>)^r stratified
by module type, checked against the closed-form stratum counts.

Public API:
    - enumerate_invariant_subspaces(n, r, q, dim=None, shards=1)
    - census(n, r, q, shards=1) -> CensusReport
    - closed_form_count(n, q), stratum_count(n, m, q)
    - quadric_cone_count(q), quadric_cone_decomposition(q), quadric_chart_transition(y, u)
    - strata_dimension_table(r, n) -> StratumDimensionTable
    - gaussian_binomial(n, k, q), plan_shards(...)

Budget:
    Enumerations refuse to run beyond QUOTFIB_BUDGET candidates per shard
    (default 10**8) and raise BudgetExceededError with a suggested shard count.
"""

from .models import CensusReport, QuadricDecomposition, StratumDimensionTable, StratumEntry
from .enumeration import (
    WorkUnit,
    census,
    census_shard,
    enumerate_invariant_subspaces,
    gaussian_binomial,
    plan_shards,
    scan_units,
)
from .counting import (
    closed_form_count,
    iter_partitions,
    projective_points,
    quadric_chart_transition,
    quadric_cone_count,
    quadric_cone_decomposition,
    strata_dimension_table,
    stratum_count,
)

__all__ = [
    "CensusReport",
    "QuadricDecomposition",
    "StratumDimensionTable",
    "StratumEntry",
    "WorkUnit",
    "census",
    "census_shard",
    "enumerate_invariant_subspaces",
    "gaussian_binomial",
    "plan_shards",
    "scan_units",
    "closed_form_count",
    "iter_partitions",
    "projective_points",
    "quadric_chart_transition",
    "quadric_cone_count",
    "quadric_cone_decomposition",
    "strata_dimension_table",
    "stratum_count",
]
