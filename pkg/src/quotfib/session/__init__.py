# quotfib/session/__init__.py
"""
Run Sessions
============

Run configuration, check execution and report emission for the command line.

Public API:
    Core Classes:
        - ReportRunner: Runs checks from a registry; failures never abort the run
        - ReportSession: Collects verdicts and results into a Report

    Models:
        - RunConfig: Validated command-line inputs
        - Report: Subcommand echo, inputs, results, verdicts, elapsed time
        - RunEvent: Event emitted while checks run

    Enums:
        - EventType: Run event types

Example Usage:
    ```python
    from quotfib.checks import load_checks
    from quotfib.session import ReportRunner, ReportSession, RunConfig

    config = RunConfig(subcommand="reproduce-paper")
    session = ReportSession(config)
    for result in ReportRunner(load_checks()).run_all():
        session.add_check_result(result)
    report = session.finish()
    print(report.to_text())
    ```
"""

from .models import (
    EventHandler,
    EventType,
    Report,
    RunConfig,
    RunEvent,
    check_section,
    safe_enum_to_string,
)
from .report_runner import ReportRunner
from .report_session import ReportSession, write_report

__all__ = [
    # Core Classes
    "ReportRunner",
    "ReportSession",
    "write_report",

    # Models
    "RunConfig",
    "Report",
    "RunEvent",
    "EventHandler",
    "check_section",

    # Enums
    "EventType",
    "safe_enum_to_string",
]
