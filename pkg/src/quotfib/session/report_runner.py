# quotfib/session/report_runner.py
"""
Report Runner
=============

Runs registered checks one after another. A check that raises is turned
into a failed CheckResult carrying an ErrorDetail; the run always goes on
to the next check.
"""

import logging
import time
from typing import Any, Dict, List, Optional, Sequence

from ..core.models import CheckResult, create_check_result, create_error_result
from ..plugins import CheckRegistry
from .models import EventHandler, EventType, RunEvent, safe_enum_to_string

logger = logging.getLogger(__name__)


class ReportRunner:
    """Executes checks from a registry and emits run events."""

    def __init__(self, registry: CheckRegistry, event_handler: EventHandler = None):
        self.registry = registry
        self.event_handler = event_handler
        self.events: List[RunEvent] = []
        logger.info(f"Report runner initialized with {len(registry.plugins)} checks")

    # ================================================================== Events

    def _emit_event(self, event_type, check_name: str = None, **details):
        """Record an event and hand it to the handler; handler errors are logged, not raised."""
        try:
            event = RunEvent(event_type=safe_enum_to_string(event_type), check_name=check_name, details=details)
            self.events.append(event)
            if self.event_handler:
                self.event_handler(event)
            logger.debug(f"Event emitted: {event.to_log_message()}")
        except Exception as e:
            logger.error(f"Error emitting event {event_type}: {e}")

    # ================================================================== Running

    def run_check(self, name: str, overrides: Optional[Dict[str, Any]] = None) -> CheckResult:
        """Validate the configuration, run the check, wrap the outcome."""
        start = time.perf_counter()
        self._emit_event(EventType.CHECK_STARTED, check_name=name, message=f"Running {name}")
        try:
            plugin = self.registry.get(name)
            config = plugin.validate_config(self._config_for(plugin, overrides or {}))
            verdicts, data = plugin.run_check(config)
            result = create_check_result(name, verdicts, data=data,
                                         message=plugin.get_check_info().claim,
                                         duration_ms=(time.perf_counter() - start) * 1000)
        except Exception as e:
            logger.error(f"Check {name} raised {type(e).__name__}: {e}")
            self._emit_event(EventType.ERROR_OCCURRED, check_name=name, message=str(e), error=type(e).__name__)
            return create_error_result(name, e, duration_ms=(time.perf_counter() - start) * 1000)

        event = EventType.CHECK_PASSED if result.success else EventType.CHECK_FAILED
        self._emit_event(event, check_name=name, message=f"{len(result.verdicts)} verdicts",
                         duration_ms=result.duration_ms)
        logger.info(f"Check {name}: {'PASS' if result.success else 'FAIL'} in {result.duration_ms:.0f} ms")
        return result

    def run_all(self, names: Optional[Sequence[str]] = None,
                overrides: Optional[Dict[str, Any]] = None) -> List[CheckResult]:
        """Run the named checks (default: every registered one, in acceptance order)."""
        names = list(names) if names is not None else self.registry.list_names()
        self._emit_event(EventType.RUN_STARTED, message=f"{len(names)} checks")
        results = [self.run_check(name, overrides) for name in names]
        failed = [result.check_name for result in results if not result.success]
        self._emit_event(EventType.RUN_FINISHED, message=f"{len(results) - len(failed)}/{len(results)} passed",
                         failed=failed)
        return results

    @staticmethod
    def _config_for(plugin, overrides: Dict[str, Any]) -> Dict[str, Any]:
        """Keep only the overrides the check's configuration model declares."""
        fields = plugin.get_config_model().model_fields
        return {key: value for key, value in overrides.items() if key in fields and value is not None}
