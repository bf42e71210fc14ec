# tests/test_probes.py
import pytest

from quotfib.algebra import parse_poly
from quotfib.charts import (
    ChartSpec,
    chart_census_bijection,
    chart_point_count_ff,
    collected_lift_check,
    complementary_subspace_count,
    g_zero_branch_count,
    generate_invariance_equations,
    singular_points_ff,
    solutions_ff,
)
from quotfib.core import BudgetExceededError, QuotfibError


@pytest.mark.parametrize("q", [2, 3, 5])
def test_singular_locus_of_the_residual_hypersurface(qq, q):
    hypersurface = parse_poly("a^3 - g*(b - a*c)", ("a", "b", "c", "g"), qq)
    points = singular_points_ff(hypersurface, q)
    assert len(points) == q
    assert all(a == 0 and b == 0 and g == 0 for a, b, _, g in points)


@pytest.mark.parametrize("q", [2, 3])
def test_g_zero_branch(q):
    assert g_zero_branch_count(q) == q * q


@pytest.mark.parametrize("q", [2, 3])
def test_collected_points_lift(q):
    count, lifted = collected_lift_check(q)
    assert count == q ** 3
    assert lifted


@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (3, 2)])
def test_chart_matches_census(n, q):
    chart = ChartSpec.standard(n)
    system = generate_invariance_equations(chart)
    assert chart_point_count_ff(system, q) == complementary_subspace_count(chart, q)
    assert chart_census_bijection(chart, q)


@pytest.mark.parametrize("q", [2, 3])
def test_n2_chart_is_the_nilpotent_cone(q):
    # the n=2 chart equations say X^2 = 0 for the 2x2 chart matrix X
    assert chart_point_count_ff(generate_invariance_equations(ChartSpec.standard(2)), q) == q * q


def test_probe_budget_and_prime():
    system = generate_invariance_equations(ChartSpec.standard(3))
    with pytest.raises(BudgetExceededError):
        solutions_ff(system, 5, budget=1000)
    with pytest.raises(QuotfibError):
        solutions_ff(system, 4)
