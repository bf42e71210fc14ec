# quotfib/charts/__init__.py
"""
Grassmannian Chart Equations
============================

Local equations of Q_n on affine charts of Gr(n, 2n), the ordered linear
elimination that reduces the n=3 chart to the hypersurface a^3 = g(b - ac),
and finite-field probes of the result.

Public API:
    Charts:
        - ChartSpec (ChartSpec.standard(n)), PolynomialSystem
        - generate_invariance_equations(chart, field=QQ)
        - chart_subspace, chart_point_of, is_complementary

    Elimination:
        - eliminate_linear(system, order) -> EliminationResult
        - reduce_with_substitution(residual, extra, target) -> ReductionVerdict
        - degree3_pipeline(), collected_substitutions(), collected_chart_matrix()

    Probes:
        - singular_points_ff(hypersurface, q), chart_point_count_ff(system, q)
        - complementary_subspace_count, chart_census_bijection
        - g_zero_branch_count(q), collected_lift_check(q)
"""

from .equations import (
    ChartSpec,
    PolynomialSystem,
    chart_point_of,
    chart_subspace,
    generate_invariance_equations,
    is_complementary,
    monomial_name,
)
from .elimination import (
    DEGREE3_ELIMINATION_ORDER,
    EliminationResult,
    EliminationStep,
    ReductionVerdict,
    collected_chart_matrix,
    collected_substitutions,
    degree3_pipeline,
    eliminate_linear,
    degree3_target,
    reduce_with_substitution,
    scalar_multiplier,
)
from .probes import (
    chart_census_bijection,
    chart_point_count_ff,
    collected_lift_check,
    complementary_subspace_count,
    g_zero_branch_count,
    singular_points_ff,
    solutions_ff,
)

__all__ = [
    "ChartSpec",
    "PolynomialSystem",
    "chart_point_of",
    "chart_subspace",
    "generate_invariance_equations",
    "is_complementary",
    "monomial_name",
    "DEGREE3_ELIMINATION_ORDER",
    "EliminationResult",
    "EliminationStep",
    "ReductionVerdict",
    "collected_chart_matrix",
    "collected_substitutions",
    "degree3_pipeline",
    "eliminate_linear",
    "degree3_target",
    "reduce_with_substitution",
    "scalar_multiplier",
    "chart_census_bijection",
    "chart_point_count_ff",
    "collected_lift_check",
    "complementary_subspace_count",
    "g_zero_branch_count",
    "singular_points_ff",
    "solutions_ff",
]
