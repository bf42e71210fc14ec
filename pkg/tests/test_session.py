# tests/test_session.py
import json

import pytest
from pydantic import ValidationError

from quotfib.checks import load_checks
from quotfib.core import DEFAULT_SEED, CheckResult, Verdict
from quotfib.session import (
    EventType,
    ReportRunner,
    ReportSession,
    RunConfig,
    RunEvent,
    write_report,
)


def test_run_config_defaults_and_inputs():
    config = RunConfig(subcommand=" Census ", n=3, q=2)
    assert config.subcommand == "census"
    assert config.seed == DEFAULT_SEED
    assert config.inputs() == {"field": "QQ", "n": 3, "q": 2, "shards": 1, "seed": DEFAULT_SEED}


@pytest.mark.parametrize("kwargs", [
    {"q": 4},
    {"q": 65537},
    {"field": "GF(6)"},
    {"n": -1},
    {"shards": 0},
    {"budget": 0},
    {"colour": "blue"},
])
def test_run_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        RunConfig(subcommand="census", **kwargs)


def test_session_collects_sections_and_verdicts():
    session = ReportSession(RunConfig(subcommand="quadric-count", q=3))
    session.add_section("quadric", {"points": 9}, [Verdict.compare("count", 9, 9)])
    session.add_verdict(Verdict.check("decomposition", True))
    report = session.finish()
    assert report.passed
    assert report.exit_code == 0
    assert report.results == {"quadric": {"points": 9}}
    text = report.to_text()
    assert text.splitlines()[0] == "quotfib quadric-count"
    assert "[PASS] count" in text
    assert "2/2 PASS" in text


def test_failed_verdict_sets_exit_code():
    session = ReportSession(RunConfig(subcommand="census"))
    session.add_verdict(Verdict.compare("total", 7, 8))
    report = session.finish()
    assert not report.passed
    assert report.exit_code == 1
    assert [verdict.name for verdict in report.failed] == ["total"]
    assert "(expected 7, observed 8)" in report.to_text()


def test_check_results_are_prefixed():
    session = ReportSession(RunConfig(subcommand="phi"))
    result = CheckResult(check_name="involution", success=True,
                         verdicts=[Verdict.check("identity", True)], data={"phi": "..."})
    session.add_check_result(result)
    report = session.finish()
    assert report.verdicts[0].name == "involution: identity"
    assert report.results["involution"]["data"] == {"phi": "..."}


def test_report_json(tmp_path):
    session = ReportSession(RunConfig(subcommand="census", n=2, q=2))
    session.add_section("census", {"total": 7}, [Verdict.compare("closed form", 7, 7)])
    report = session.finish()
    path = write_report(report, str(tmp_path / "out" / "report.json"))
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["subcommand"] == "census"
    assert data["inputs"]["n"] == 2
    assert data["results"]["census"]["total"] == 7
    assert data["verdicts"][0]["status"] == "PASS"
    assert data["passed"] is True


def test_runner_emits_events():
    seen = []
    runner = ReportRunner(load_checks(["involution"]), event_handler=seen.append)
    results = runner.run_all()
    assert [result.check_name for result in results] == ["involution"]
    types = [event.event_type for event in seen]
    assert types == ["run_started", "check_started", "check_passed", "run_finished"]
    assert seen[-1].details["failed"] == []


def test_runner_survives_unknown_check_and_bad_handler():
    def handler(event):
        raise RuntimeError("handler broke")

    runner = ReportRunner(load_checks(["involution"]), event_handler=handler)
    results = runner.run_all(["no_such_check", "involution"])
    assert not results[0].success
    assert results[0].error_detail.error_type == "ValueError"
    assert results[1].success
    assert any(event.event_type == EventType.ERROR_OCCURRED.value for event in runner.events)


def test_runner_drops_undeclared_overrides():
    runner = ReportRunner(load_checks(["involution"]))
    result = runner.run_check("involution", {"n": 5, "golden_dir": None, "seed": 3})
    assert result.success


def test_event_log_message():
    event = RunEvent(event_type=EventType.CHECK_FAILED, check_name="census", details={"message": "1 verdicts"})
    assert event.to_log_message() == "check_failed [census]: 1 verdicts"
