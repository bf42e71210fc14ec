# tests/test_checks.py
import pytest

from quotfib.checks import CHECK_MODULES, load_checks
from quotfib.session import ReportRunner


def test_every_check_module_loads():
    registry = load_checks()
    assert set(registry.list_names()) == set(CHECK_MODULES)
    assert registry.list_names() == CHECK_MODULES
    ids = [info.acceptance_id for info in registry.get_all_info().values()]
    assert ids == sorted(ids)


def test_config_schemas_are_exposed():
    registry = load_checks(["census_closed_form", "stable_pair_invariants"])
    for name in registry.list_names():
        schema = registry.get(name).get_json_schema()
        assert "seed" in schema["properties"]


@pytest.mark.parametrize("name", ["involution", "pullback_table", "discrepancy_ledger", "cramer_identity"])
def test_quick_checks_pass(name):
    runner = ReportRunner(load_checks([name]))
    result = runner.run_check(name)
    assert result.success, result.error
    assert result.verdicts


def test_census_check_with_small_ranges():
    runner = ReportRunner(load_checks(["census_closed_form"]))
    result = runner.run_check("census_closed_form", {"pairs": [(2, 2), (3, 2)], "shards": None})
    assert result.success, result.error


def test_invalid_override_becomes_failed_result():
    runner = ReportRunner(load_checks(["cramer_identity"]))
    result = runner.run_check("cramer_identity", {"q": 4})
    assert not result.success
    assert result.error_detail is not None
    assert result.error_detail.error_type == "ValueError"
