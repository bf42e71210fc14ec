# quotfib/session/report_session.py
"""
Report Session
==============

Accumulates verdicts and structured results while a subcommand runs, then
freezes them into a Report and writes it out as JSON and text.
"""

from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional
import logging
import time

from ..core.models import CheckResult, Verdict
from .models import Report, RunConfig, check_section

logger = logging.getLogger(__name__)


class ReportSession:
    """One subcommand's worth of results."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.results: Dict[str, Any] = {}
        self.verdicts: List[Verdict] = []
        self._start = time.perf_counter()
        logger.debug(f"Started report session for '{config.subcommand}'")

    # ------------------------------------------------------------------ recording

    def add_section(self, name: str, data: Any, verdicts: Iterable[Verdict] = ()):
        """Record a result section and its verdicts; re-using a name replaces the section."""
        self.results[name] = data
        for verdict in verdicts:
            self.add_verdict(verdict)

    def add_verdict(self, verdict: Verdict):
        self.verdicts.append(verdict)
        if not verdict.passed:
            logger.warning(f"FAIL {verdict.name}: {verdict.message}")

    def add_check_result(self, result: CheckResult):
        """Fold in a check: its data under the check name, its verdicts prefixed by it."""
        self.results[result.check_name] = check_section(result)
        for verdict in result.verdicts:
            self.add_verdict(verdict.model_copy(update={"name": f"{result.check_name}: {verdict.name}"}))

    @property
    def passed(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    # ------------------------------------------------------------------ output

    def finish(self) -> Report:
        report = Report(
            subcommand=self.config.subcommand,
            inputs=self.config.inputs(),
            results=self.results,
            verdicts=list(self.verdicts),
            elapsed_ms=(time.perf_counter() - self._start) * 1000,
        )
        logger.info(f"{self.config.subcommand}: {len(report.verdicts) - len(report.failed)}/"
                    f"{len(report.verdicts)} verdicts PASS")
        return report


def write_report(report: Report, json_path: Optional[str] = None, stream=None) -> Optional[Path]:
    """Print the text rendering to `stream` (if given) and write JSON to `json_path` (if given)."""
    if stream is not None:
        print(report.to_text(), file=stream)
    if not json_path:
        return None
    path = Path(json_path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.to_json() + "\n", encoding="utf-8")
    logger.info(f"Wrote JSON report to {path}")
    return path
