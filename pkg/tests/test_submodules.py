# tests/test_submodules.py
import pytest
from pydantic import ValidationError

from quotfib.algebra import TruncatedPoly
from quotfib.core import ChartError, NotAUnitError, ShapeMismatchError
from quotfib.modules import (
    ModuleElement,
    ModuleType,
    SubmoduleBasis,
    chart_coords,
    chart_transition,
    classify_type,
    cyclic_kernel,
    membership,
    partition_from_dims,
    submodule_from_u_coords,
    submodule_from_v_coords,
    t_closure,
    t_invariant,
)


def test_module_element_vector_layout(qq):
    v = ModuleElement.parse("(1, t)", 2, qq)
    assert v.vector() == (qq(1), qq(0), qq(0), qq(1))
    assert v.shift() == ModuleElement.parse("(t, 0)", 2, qq)
    assert str(v) == "(1, t)"


def test_module_types():
    assert ModuleType.of(1, 2) == ModuleType.from_label("(2,1)")
    assert str(ModuleType.of(3)) == "(3)"
    assert ModuleType.from_label("()").length == 0
    assert ModuleType.of(2, 1).parts == 2
    with pytest.raises(ValidationError):
        ModuleType(partition=(1, 2))
    with pytest.raises(ValidationError):
        ModuleType(partition=(2, 0))


@pytest.mark.parametrize("dims, partition", [
    ([3, 1, 0], (2, 1)),
    ([2, 0], (1, 1)),
    ([4, 2, 0], (2, 2)),
    ([3, 2, 1, 0], (3,)),
    ([0], ()),
])
def test_partition_from_dims(dims, partition):
    assert partition_from_dims(dims) == partition


def test_classify_full_and_maximal_ideal(qq):
    assert classify_type(SubmoduleBasis.full(2, 2, qq)) == ModuleType.of(2, 2)
    t_times_m = SubmoduleBasis(2, 2, qq, [[0, 1, 0, 0], [0, 0, 0, 1]])
    assert classify_type(t_times_m) == ModuleType.of(1, 1)
    assert classify_type(SubmoduleBasis.zero(3, 2, qq)) == ModuleType(partition=())


def test_non_invariant_subspace_rejected(qq):
    with pytest.raises(ShapeMismatchError):
        SubmoduleBasis(2, 1, qq, [[1, 0]])
    assert not t_invariant([[1, 0]], 2, 1, qq)
    assert t_invariant([[0, 1]], 2, 1, qq)
    assert t_invariant([], 2, 1, qq)


def test_cyclic_kernel(qq):
    e = TruncatedPoly.parse("1", 3, qq)
    h = TruncatedPoly.parse("t", 3, qq)
    generator, basis = cyclic_kernel(e, h)
    assert generator == ModuleElement.parse("(-t, 1)", 3, qq)
    assert basis.dim == 3
    assert basis.is_t_invariant()
    assert classify_type(basis) == ModuleType.of(3)
    assert membership(ModuleElement.parse("(-t^2, t)", 3, qq), basis)
    assert not membership(ModuleElement.parse("(1, 0)", 3, qq), basis)


def test_cyclic_kernel_needs_a_unit(qq):
    t = TruncatedPoly.parse("t", 2, qq)
    with pytest.raises(NotAUnitError):
        cyclic_kernel(t, t)


def test_t_closure_matches_explicit_rows(qq):
    closure = t_closure([ModuleElement.parse("(1, 1)", 2, qq)])
    explicit = SubmoduleBasis(2, 2, qq, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert closure == explicit
    assert t_closure([], n=2, r=2, field=qq).dim == 0
    with pytest.raises(ShapeMismatchError):
        t_closure([])


def test_chart_coordinates(qq):
    s = submodule_from_u_coords([2, 3], qq)
    coords = chart_coords(s)
    assert coords.in_u and coords.in_v
    assert coords.u_coords == (qq(2), qq(3))
    assert coords.v_coords == chart_transition([2, 3], qq)
    assert coords.description == "chart U and V"

    only_u = chart_coords(submodule_from_u_coords([0, 1], qq))
    assert only_u.in_u and not only_u.in_v
    assert only_u.to_report()["v_coords"] is None


def test_non_cyclic_is_in_neither_chart(qq):
    coords = chart_coords(SubmoduleBasis(2, 2, qq, [[0, 1, 0, 0], [0, 0, 0, 1]]))
    assert not coords.in_u and not coords.in_v
    assert coords.description == "non-cyclic"


def test_chart_transition_formula_for_n2(qq):
    m1, m2 = qq(2), qq(3)
    assert chart_transition([m1, m2]) == (1 / m1, -m2 / (m1 * m1))
    with pytest.raises(ChartError):
        chart_transition([0, 1], qq)
    with pytest.raises(ChartError):
        chart_coords(SubmoduleBasis.zero(2, 3, qq))


def test_chart_transition_is_an_involution(gf5, rng):
    for _ in range(50):
        n = rng.randrange(1, 5)
        m = [rng.randrange(1, 5)] + [rng.randrange(5) for _ in range(n - 1)]
        l = chart_transition(m, gf5)
        assert chart_transition(l, gf5) == tuple(gf5(x) for x in m)
        assert submodule_from_v_coords(l, gf5) == submodule_from_u_coords(m, gf5)
