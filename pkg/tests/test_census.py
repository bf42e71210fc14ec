# tests/test_census.py
import pytest
from pydantic import ValidationError

from quotfib.census import (
    CensusReport,
    census,
    closed_form_count,
    enumerate_invariant_subspaces,
    gaussian_binomial,
    plan_shards,
    stratum_count,
)
from quotfib.core import BudgetExceededError, QuotfibError
from quotfib.modules import ModuleType, classify_type


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(3, 4, 2) == 0


@pytest.mark.parametrize("n, q, expected", [(2, 2, 7), (3, 2, 15), (3, 3, 40), (4, 2, 31)])
def test_rank_two_census_matches_closed_form(n, q, expected):
    report = census(n, 2, q)
    assert report.total == expected == closed_form_count(n, q)
    for m in range(n // 2 + 1):
        module_type = ModuleType.of(*(part for part in (n - m, m) if part))
        assert report.count(module_type) == stratum_count(n, m, q)


def test_census_strata_labels():
    report = census(2, 2, 2)
    assert report.by_type == {"(2)": 6, "(1,1)": 1}
    assert report.candidates == gaussian_binomial(4, 2, 2)


def test_rank_three_census():
    report = census(2, 3, 2)
    assert report.total == 35
    assert report.by_type == {"(2)": 28, "(1,1)": 7}


def test_sharded_census_agrees():
    single = census(3, 2, 2)
    sharded = census(3, 2, 2, shards=3)
    assert sharded.same_counts(single)
    assert sharded.shards >= 2


def test_plan_covers_every_candidate():
    plan = plan_shards(3, 2, 2, 3, shards=4)
    covered = sum(unit.stop - unit.start for shard in plan for unit in shard)
    assert covered == gaussian_binomial(6, 3, 2)
    assert len(plan) == 4


def test_budget_refusal_suggests_shards():
    with pytest.raises(BudgetExceededError) as info:
        census(3, 2, 2, budget=10)
    assert info.value.candidates == gaussian_binomial(6, 3, 2)
    assert info.value.suggested_shards == 140


def test_enumeration_returns_invariant_bases():
    bases = enumerate_invariant_subspaces(2, 2, 2)
    assert len(bases) == 7
    assert all(basis.dim == 2 and basis.is_t_invariant() for basis in bases)
    assert sum(1 for basis in bases if classify_type(basis) == ModuleType.of(1, 1)) == 1


def test_invalid_census_inputs():
    with pytest.raises(QuotfibError):
        census(2, 2, 4)
    with pytest.raises(QuotfibError):
        census(2, 0, 2)


def test_report_validation():
    with pytest.raises(ValidationError):
        CensusReport(n=2, r=2, q=2, total=7, by_type={"(2)": 6})
    with pytest.raises(ValidationError):
        CensusReport(n=2, r=2, q=2, total=1, by_type={"(3)": 1})


def test_merge_is_order_independent():
    a = CensusReport(n=2, r=2, q=2, total=4, by_type={"(2)": 4}, candidates=20)
    b = CensusReport(n=2, r=2, q=2, total=3, by_type={"(2)": 2, "(1,1)": 1}, candidates=15)
    ab = CensusReport.merge([a, b])
    assert ab.same_counts(CensusReport.merge([b, a]))
    assert ab.total == 7 and ab.shards == 2
    assert list(ab.by_type) == ["(2)", "(1,1)"]
    with pytest.raises(ValueError):
        CensusReport.merge([a, CensusReport(n=2, r=2, q=3)])
