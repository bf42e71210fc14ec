# quotfib/charts/probes.py
"""
Finite-Field Probes
===================
Brute-force point counts and singular-point searches over F_q, plus the
chart-versus-census comparisons for the chart equations.
"""

from itertools import product
from typing import List, Optional, Sequence, Tuple
import logging

from ..core.errors import BudgetExceededError, QuotfibError
from ..core.settings import enumeration_budget
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import is_prime, prime_field
from ..census.enumeration import enumerate_invariant_subspaces
from .elimination import collected_substitutions
from .equations import ChartSpec, PolynomialSystem, chart_subspace, generate_invariance_equations, is_complementary

logger = logging.getLogger(__name__)


def _check_budget(q: int, nvars: int, budget: Optional[int]):
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    candidates = q ** nvars
    cap = enumeration_budget(budget)
    if candidates > cap:
        logger.warning(f"Refusing to scan {candidates} points of F_{q}^{nvars}; budget {cap}")
        raise BudgetExceededError(candidates, cap)


def singular_points_ff(hypersurface: MultiPoly, q: int, budget: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Affine F_q-points where the polynomial and all its partial derivatives vanish."""
    nvars = len(hypersurface.vars)
    _check_budget(q, nvars, budget)
    poly = hypersurface.change_field(prime_field(q))
    checks = [poly.evaluator()] + [derivative.evaluator() for derivative in poly.gradient()]
    points = [point for point in product(range(q), repeat=nvars) if not any(check(point) for check in checks)]
    logger.debug(f"{len(points)} singular points of {hypersurface} over F_{q}")
    return points


def solutions_ff(system: PolynomialSystem, q: int, budget: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All common F_q-zeros, in lexicographic order of the variables."""
    nvars = len(system.vars)
    _check_budget(q, nvars, budget)
    field = prime_field(q)
    checks = [equation.change_field(field).evaluator() for equation in system.equations]
    return [point for point in product(range(q), repeat=nvars) if not any(check(point) for check in checks)]


def chart_point_count_ff(system: PolynomialSystem, q: int, budget: Optional[int] = None) -> int:
    return len(solutions_ff(system, q, budget))


def complementary_subspace_count(chart: ChartSpec, q: int, budget: Optional[int] = None) -> int:
    """Census subspaces of dimension n that lie in the chart."""
    subspaces = enumerate_invariant_subspaces(chart.n, 2, q, budget=budget)
    return sum(1 for subspace in subspaces if is_complementary(subspace, chart))


def chart_census_bijection(chart: ChartSpec, q: int, budget: Optional[int] = None) -> bool:
    """
    Every F_q-solution of the chart equations spans a distinct t-invariant
    subspace in the chart, and they are all of them.
    """
    solutions = solutions_ff(generate_invariance_equations(chart), q, budget)
    from_solutions = {chart_subspace(chart, point, q) for point in solutions}
    census_side = {s for s in enumerate_invariant_subspaces(chart.n, 2, q, budget=budget) if is_complementary(s, chart)}
    return len(from_solutions) == len(solutions) and from_solutions == census_side


def g_zero_branch_count(q: int, budget: Optional[int] = None) -> int:
    """F_q-solutions of the n=3 chart equations with g = 0."""
    chart = ChartSpec.standard(3)
    system = generate_invariance_equations(chart)
    g = MultiPoly.variable("g", chart.variables, system.field)
    return chart_point_count_ff(system.with_equations([g]), q, budget)


def collected_lift_check(q: int) -> Tuple[int, bool]:
    """
    Number of F_q-points of a^3 = g(b - ac) and whether each one, pushed
    through the collected substitutions, solves all nine chart equations.
    """
    field = prime_field(q)
    chart = ChartSpec.standard(3)
    equations = [eq.change_field(field).evaluator() for eq in generate_invariance_equations(chart).equations]
    values = {name: poly.change_field(field).evaluator() for name, poly in collected_substitutions().items()}
    a, b, c, g = MultiPoly.gens(("a", "b", "c", "g"), field)
    on_surface = (a ** 3 - g * (b - a * c)).evaluator()
    count, lifted = 0, True
    for point in product(range(q), repeat=4):
        if on_surface(point):
            continue
        count += 1
        chart_point = tuple(values[name](point) for name in chart.variables)
        if any(check(chart_point) for check in equations):
            lifted = False
    return count, lifted
