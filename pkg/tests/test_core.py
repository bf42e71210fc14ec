# tests/test_core.py
import pytest
from pydantic import ValidationError

from quotfib.core import (
    BUDGET_ENV_VAR,
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    CheckConfig,
    CheckResult,
    ErrorDetail,
    QuotfibError,
    ResultStatus,
    Verdict,
    create_check_result,
    create_error_result,
    enumeration_budget,
)


def test_verdict_compare_records_text():
    ok = Verdict.compare("census total", 7, 7)
    assert ok.passed
    assert ok.expected == "7" and ok.observed == "7"
    assert ok.message is None

    bad = Verdict.compare("census total", 7, 8)
    assert not bad.passed
    assert "expected 7, observed 8" in bad.message


def test_verdict_check():
    assert Verdict.check("holds", True).passed
    assert Verdict.check("fails", False, "nope").message == "nope"


def test_create_check_result_success_follows_verdicts():
    result = create_check_result("demo", [Verdict.check("a", True), Verdict.compare("b", 1, 2)])
    assert not result.success
    assert result.failed_verdicts == ["b"]
    assert result.error.startswith("b:")

    good = create_check_result("demo", [Verdict.check("a", True)], data={"x": 1})
    assert good.success and bool(good)
    assert good.data == {"x": 1}


def test_check_result_rejects_success_with_failing_verdict():
    with pytest.raises(ValidationError):
        CheckResult(check_name="demo", success=True, verdicts=[Verdict.check("a", False)])


def test_error_result_carries_suggestions():
    result = create_error_result("census", BudgetExceededError(100, 10, suggested_shards=10))
    assert not result.success
    assert result.error_detail.error_type == "budget_exceeded"
    assert any("--shards 10" in hint for hint in result.error_detail.suggestions)
    assert len(result.verdicts) == 1 and not result.verdicts[0].passed


def test_error_detail_for_foreign_exception():
    detail = ErrorDetail.from_exception(KeyError("x"))
    assert detail.error_type == "KeyError"
    assert detail.suggestions == []


def test_quotfib_error_is_value_error():
    assert issubclass(QuotfibError, ValueError)
    assert issubclass(BudgetExceededError, QuotfibError)


def test_check_config_forbids_unknown_fields_and_cleans_tags():
    config = CheckConfig(tags=[" Census ", "census", "golden"])
    assert config.tags == ["census", "golden"]
    with pytest.raises(ValidationError):
        CheckConfig(primes=[2])


def test_enumeration_budget_sources(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
    assert enumeration_budget() == DEFAULT_ENUMERATION_BUDGET
    monkeypatch.setenv(BUDGET_ENV_VAR, "1234")
    assert enumeration_budget() == 1234
    assert enumeration_budget(50) == 50
    monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
    assert enumeration_budget() == DEFAULT_ENUMERATION_BUDGET


def test_check_models_carry_only_report_fields():
    assert [status.value for status in ResultStatus] == ["success", "error"]
    with pytest.raises(ValidationError):
        CheckConfig(custom_settings={"q": 5})
    result = create_check_result("involution", [Verdict.check("identity", True)])
    assert "warnings" not in result.model_dump()
