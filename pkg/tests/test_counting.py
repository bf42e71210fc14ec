# tests/test_counting.py
import pytest

from quotfib.algebra import prime_field
from quotfib.census import (
    closed_form_count,
    iter_partitions,
    projective_points,
    quadric_chart_transition,
    quadric_cone_count,
    quadric_cone_decomposition,
    stratum_count,
    strata_dimension_table,
)
from quotfib.core import QuotfibError
from quotfib.modules import ModuleType


def test_closed_form_recursion():
    assert [closed_form_count(n, 2) for n in range(5)] == [1, 3, 7, 15, 31]
    assert closed_form_count(3, 3) == 40
    with pytest.raises(QuotfibError):
        closed_form_count(-1, 2)


def test_strata_sum_to_closed_form():
    for q in (2, 3, 5):
        for n in range(1, 7):
            assert sum(stratum_count(n, m, q) for m in range(n // 2 + 1)) == closed_form_count(n, q)
    with pytest.raises(QuotfibError):
        stratum_count(3, 2, 2)


def test_projective_points_count():
    assert len(list(projective_points(3, 2))) == 15
    assert len(set(projective_points(2, 3))) == 13


@pytest.mark.parametrize("q", [2, 3, 5])
def test_quadric_cone_matches_q2(q):
    assert quadric_cone_count(q) == closed_form_count(2, q) == q * q + q + 1
    decomposition = quadric_cone_decomposition(q)
    assert decomposition.consistent
    assert decomposition.singular == 1
    assert decomposition.chart_x == decomposition.chart_z == q * q
    assert decomposition.overlap == (q - 1) * q


def test_quadric_chart_transition():
    gf5 = prime_field(5)
    assert quadric_chart_transition(gf5(2), 3) == (gf5(3), gf5(3))
    with pytest.raises(QuotfibError):
        quadric_chart_transition(gf5(0), 1)
    with pytest.raises(QuotfibError):
        quadric_chart_transition(2, 1)


def test_iter_partitions():
    assert list(iter_partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert list(iter_partitions(3, 3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(iter_partitions(0, 0)) == [()]


def test_rank_two_dimension_table():
    table = strata_dimension_table(2, 4)
    assert [(str(e.module_type), e.dimension) for e in table.entries] == [("(4)", 4), ("(3,1)", 2), ("(2,2)", 0)]
    assert table.entries[-1].description == "single point"
    assert table.to_report()["entries"][1]["description"] == "A^1-bundle over P^1"


def test_higher_rank_dimension_table():
    table = strata_dimension_table(3, 3)
    assert table.dimension_of(ModuleType.of(3)) == 6
    assert table.dimension_of(ModuleType.of(2, 1)) == 4
    assert table.dimension_of(ModuleType.of(1, 1, 1)) is None
    with pytest.raises(KeyError):
        table.dimension_of(ModuleType.of(4))
    with pytest.raises(QuotfibError):
        strata_dimension_table(1, 3)
