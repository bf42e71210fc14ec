# tests/test_maps.py
import pytest

from quotfib.algebra import MultiPoly, parse_poly
from quotfib.birational import (
    SOURCE_VARS,
    ProjectiveMap,
    compose,
    discrepancy_coefficient,
    identity_map,
    jacobian,
    jacobian_order,
    normalize_point,
    phi_standard,
    valid_charts,
)
from quotfib.core import ChartError, DegenerateChartError, QuotfibError, ShapeMismatchError


def m(text, field):
    return parse_poly(text, SOURCE_VARS, field)


def test_phi_coordinates_and_values(qq):
    phi = phi_standard(qq)
    assert phi.degree == 3
    assert phi.coordinate(3) == m("m1^3", qq)
    assert [str(c) for c in phi.evaluate([1, 1, 1, 1])] == ["1", "-1", "0", "1"]
    assert [str(c) for c in phi.evaluate([2, 1, 0, 1])] == ["1", "-1/2", "1/4", "2"]


def test_phi_is_undefined_on_its_base_locus(qq):
    with pytest.raises(QuotfibError):
        phi_standard(qq).evaluate([0, 0, 0, 1])
    with pytest.raises(QuotfibError):
        normalize_point([qq(0), qq(0)])


def test_phi_is_an_involution(qq):
    phi = phi_standard(qq)
    square = compose(phi, phi)
    assert square.is_identity()
    assert square.cleared == m("m1^6*m4^2", qq)
    assert square.target_vars == phi.target_vars


def test_compose_with_identity(qq):
    phi = phi_standard(qq)
    assert compose(phi, identity_map(field=qq)) == phi
    assert compose(identity_map(field=qq), phi) == phi


def test_constructor_removes_monomial_content(qq):
    f = ProjectiveMap([m("m1*m2", qq), m("m1*m3", qq), m("m1*m4", qq), m("m1^2", qq)])
    assert f.coords == (m("m2", qq), m("m3", qq), m("m4", qq), m("m1", qq))
    assert f.cleared == m("m1", qq)
    assert not f.is_identity()
    assert ProjectiveMap([m("2*m1", qq), m("2*m2", qq), m("2*m3", qq), m("2*m4", qq)]).is_identity()


def test_constructor_rejects_bad_coordinates(qq):
    zero = MultiPoly.zero(SOURCE_VARS, qq)
    with pytest.raises(QuotfibError):
        ProjectiveMap([zero, zero, zero, zero])
    with pytest.raises(ShapeMismatchError):
        ProjectiveMap([m("m1", qq), m("m2^2", qq), m("m3", qq), m("m4", qq)])
    with pytest.raises(ShapeMismatchError):
        ProjectiveMap([m("m1", qq), m("m2", qq)], target_vars=("y1",))


def test_pullback_polynomial(qq):
    phi = phi_standard(qq)
    l1 = parse_poly("l1", phi.target_vars, qq)
    assert phi.pullback_polynomial(l1) == m("m1^2*m4", qq)
    with pytest.raises(ShapeMismatchError):
        phi.pullback_polynomial(parse_poly("x", ("x",), qq))


def test_jacobian_orders_along_exceptional_primes(qq):
    phi = phi_standard(qq)
    assert jacobian_order(phi, m("m1", qq), 3, 3) == -6
    assert jacobian_order(phi, m("m4", qq), 2, 3) == 2
    assert discrepancy_coefficient(phi, m("m1", qq), 3, 3) == -6
    assert discrepancy_coefficient(phi, m("m4", qq), 2, 3) == -2


def test_a1_discrepancy_is_chart_independent(qq):
    phi = phi_standard(qq)
    assert discrepancy_coefficient(phi, m("m1", qq), 3, 0) == discrepancy_coefficient(phi, m("m1", qq), 3, 3)
    assert (3, 3) in valid_charts(phi, m("m1", qq))
    assert all(s != 0 for s, _ in valid_charts(phi, m("m1", qq)))


def test_degenerate_and_invalid_charts(qq):
    flat = ProjectiveMap([m("m1", qq), m("m1", qq), m("m3", qq), m("m4", qq)])
    with pytest.raises(DegenerateChartError):
        jacobian(flat, 3, 3)
    with pytest.raises(ChartError):
        phi_standard(qq).dehomogenized(4, 0)
    with pytest.raises(ChartError):
        jacobian_order(phi_standard(qq), m("m1", qq), 0, 3)
