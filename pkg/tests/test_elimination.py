# tests/test_elimination.py
import pytest

from quotfib.algebra import MultiPoly, parse_poly, prime_field
from quotfib.charts import (
    DEGREE3_ELIMINATION_ORDER,
    ChartSpec,
    PolynomialSystem,
    collected_chart_matrix,
    collected_substitutions,
    degree3_pipeline,
    degree3_target,
    eliminate_linear,
    generate_invariance_equations,
    reduce_with_substitution,
    scalar_multiplier,
)
from quotfib.core import EliminationError, QuotfibError


def test_eliminate_linear_back_substitutes(qq):
    vars = ("x", "y", "z")
    system = PolynomialSystem(vars=vars, equations=[
        parse_poly("x - y*z", vars, qq),
        parse_poly("2*y - z^2", vars, qq),
        parse_poly("x*z - 1", vars, qq),
    ])
    result = eliminate_linear(system, ["x", "y"])
    assert result.residual.vars == ("z",)
    assert str(result.substitutions["y"]) == "1/2*z^2"
    assert str(result.substitutions["x"]) == "1/2*z^3"
    assert result.residual.as_strings() == ["z^4 - 2"]
    assert [step.variable for step in result.steps] == ["x", "y"]


def test_elimination_errors(qq):
    chart = ChartSpec.standard(2)
    system = generate_invariance_equations(chart, qq)
    with pytest.raises(EliminationError):
        eliminate_linear(system, ["a"])
    with pytest.raises(EliminationError):
        eliminate_linear(system, ["z"])
    with pytest.raises(QuotfibError):
        eliminate_linear(system, ["b", "b"])


def test_degree3_pipeline(qq):
    system, result, verdict = degree3_pipeline(qq)
    assert len(system) == 9
    assert set(result.substitutions) == set(DEGREE3_ELIMINATION_ORDER)
    assert result.residual.vars == ("a", "b", "c", "g", "i")
    assert str(result.substitutions["d"]) == "-a^2 - c*g"
    assert verdict.passed
    assert all(m is not None and m.value in (0, 1, -1) for m in verdict.multipliers)
    assert verdict.target == "a^3 + a*c*g - b*g"


def test_degree3_pipeline_over_prime_field():
    _, _, verdict = degree3_pipeline(prime_field(7))
    assert verdict.passed


def test_scalar_multiplier(qq):
    vars = ("x", "y")
    target = parse_poly("x + y", vars, qq)
    assert scalar_multiplier(parse_poly("2*x + 2*y", vars, qq), target) == 2
    assert scalar_multiplier(parse_poly("x - y", vars, qq), target) is None
    assert scalar_multiplier(MultiPoly.zero(vars, qq), target) == 0
    assert scalar_multiplier(parse_poly("3*x", ("x",), qq), parse_poly("x", vars, qq)) == 3


def test_reduction_needs_nonzero_target(qq):
    vars = ("x",)
    residual = PolynomialSystem(vars=vars, equations=[parse_poly("x", vars, qq)])
    with pytest.raises(QuotfibError):
        reduce_with_substitution(residual, {}, MultiPoly.zero(vars, qq))


def test_collected_substitutions_solve_the_chart(qq):
    values = collected_substitutions(qq)
    chart = ChartSpec.standard(3)
    target = degree3_target(qq).with_vars(("a", "b", "c", "g"))
    for equation in generate_invariance_equations(chart, qq).equations:
        image = equation.substitute(values).with_vars(("a", "b", "c", "g"))
        assert image.is_zero() or target.divides(image)
    rows = collected_chart_matrix(qq)
    assert len(rows) == 3 and all(len(row) == 6 for row in rows)
    assert rows[2][5] == -MultiPoly.variable("a", ("a", "b", "c", "g"), qq)
