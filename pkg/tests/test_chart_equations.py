# tests/test_chart_equations.py
import pytest
from pydantic import ValidationError

from quotfib.algebra import parse_poly
from quotfib.charts import (
    ChartSpec,
    PolynomialSystem,
    chart_point_of,
    chart_subspace,
    generate_invariance_equations,
    is_complementary,
    monomial_name,
    solutions_ff,
)
from quotfib.checks.golden import CHART_EQUATIONS_FILE, golden_lines
from quotfib.core import ChartError, ShapeMismatchError


def test_monomial_names():
    assert [monomial_name(m) for m in [(0, 0), (0, 1), (1, 2)]] == ["u", "ut", "vt^2"]


def test_standard_chart_n3():
    chart = ChartSpec.standard(3)
    assert chart.describe() == "W0 = Span(ut, ut^2, vt^2), complement Span(u, v, vt)"
    assert chart.variables == tuple("abcdefghi")
    assert chart.variable(2, 1) == "h"
    assert chart.index((1, 2)) == 5


def test_chart_validation():
    with pytest.raises(ChartError):
        ChartSpec.standard(6)
    with pytest.raises(ValidationError):
        ChartSpec(n=2, reference=((0, 1), (0, 1)), complement=((0, 0), (1, 0)), variables=tuple("abcd"))
    with pytest.raises(ValidationError):
        ChartSpec(n=1, r=3, reference=((0, 0),), complement=((1, 0),), variables=("a",))


def test_n3_equations_match_golden_file(qq):
    chart = ChartSpec.standard(3)
    produced = generate_invariance_equations(chart, qq).normalized().as_strings()
    golden = {str(parse_poly(line, chart.variables, qq).monic())
              for line in golden_lines(CHART_EQUATIONS_FILE)}
    assert len(produced) == 9
    assert set(produced) == golden
    assert "a^2 + c*g + d" in produced
    assert "c*g + i^2 - h" in produced


def test_small_charts(qq):
    assert len(generate_invariance_equations(ChartSpec.standard(1), qq)) == 0
    system = generate_invariance_equations(ChartSpec.standard(2), qq)
    assert len(system) == 4
    assert system.field == qq


def test_polynomial_system_drops_zero_equations(qq):
    vars = ("x", "y")
    system = PolynomialSystem(vars=vars, equations=[parse_poly("x - x", vars, qq), parse_poly("2*y", vars, qq)])
    assert len(system) == 1
    assert system.normalized().as_strings() == ["y"]
    embedded = PolynomialSystem(vars=vars, equations=[parse_poly("x", ("x",), qq)])
    assert embedded.equations[0].vars == vars


def test_chart_points_round_trip_through_subspaces():
    chart = ChartSpec.standard(2)
    for point in solutions_ff(generate_invariance_equations(chart), 3):
        subspace = chart_subspace(chart, point, 3)
        assert is_complementary(subspace, chart)
        assert chart_point_of(subspace, chart) == point


def test_non_solution_is_not_a_subspace_of_q():
    chart = ChartSpec.standard(2)
    with pytest.raises(ShapeMismatchError):
        chart_subspace(chart, (1, 0, 0, 0), 2)
    with pytest.raises(ShapeMismatchError):
        chart_subspace(chart, (0, 0, 0), 2)
