# quotfib/session/models.py
"""
Session Models
==============

Pydantic models for a run of the command line: the validated run
configuration, the events a run emits, and the report it produces.
"""

from typing import Any, Callable, Dict, List, Optional
from datetime import datetime
from enum import Enum
import json

from pydantic import BaseModel, Field, computed_field, field_validator

from ..core.models import DEFAULT_SEED, CheckResult, Verdict
from ..core.settings import MAX_PRIME
from ..algebra.scalars import is_prime, parse_field


# ================================================================== Enums

class EventType(str, Enum):
    """Run event types."""
    RUN_STARTED = "run_started"
    CHECK_STARTED = "check_started"
    CHECK_PASSED = "check_passed"
    CHECK_FAILED = "check_failed"
    RUN_FINISHED = "run_finished"
    ERROR_OCCURRED = "error_occurred"


def safe_enum_to_string(value) -> str:
    """Enum member or plain string to its lowercase string value."""
    if value is None:
        return "unknown"
    if isinstance(value, Enum):
        return str(value.value)
    text = str(value)
    if '.' in text:
        return text.split('.')[-1].lower()
    return text.lower()


# ================================================================== Events

class RunEvent(BaseModel):
    """Something that happened during a run."""
    event_type: str = Field(..., description="Type of event (string value)")
    check_name: Optional[str] = Field(None, description="Related check")
    timestamp: datetime = Field(default_factory=datetime.now, description="Event timestamp")
    details: Dict[str, Any] = Field(default_factory=dict, description="Event details")

    @field_validator('event_type', mode='before')
    @classmethod
    def normalize_event_type(cls, v):
        return safe_enum_to_string(v)

    def to_log_message(self) -> str:
        check_part = f" [{self.check_name}]" if self.check_name else ""
        message = self.details.get('message', 'No details')
        return f"{self.event_type}{check_part}: {message}"


EventHandler = Callable[[RunEvent], None]


# ================================================================== Run configuration

class RunConfig(BaseModel):
    """Validated command-line inputs shared by every subcommand."""
    subcommand: str = Field(..., description="Subcommand being run")
    field: str = Field(default="QQ", description="'QQ' or a prime p < 2^16")
    n: Optional[int] = Field(None, ge=0, description="Truncation order")
    r: Optional[int] = Field(None, ge=1, description="Rank")
    q: Optional[int] = Field(None, description="Prime field order")
    shards: int = Field(default=1, ge=1, description="Census worker shards")
    seed: int = Field(default=DEFAULT_SEED, description="Seed for randomized checks")
    json_path: Optional[str] = Field(None, description="Where to write the JSON report")
    golden_dir: Optional[str] = Field(None, description="Directory overriding the packaged golden files")
    budget: Optional[int] = Field(None, ge=1, description="Enumeration budget overriding QUOTFIB_BUDGET")

    model_config = {
        "extra": "forbid",
    }

    @field_validator('subcommand')
    @classmethod
    def validate_subcommand(cls, v):
        if not v or not v.strip():
            raise ValueError("Subcommand cannot be empty")
        return v.strip().lower()

    @field_validator('field')
    @classmethod
    def validate_field(cls, v):
        parse_field(v)
        return v.strip()

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        if v is not None and (not is_prime(v) or v >= MAX_PRIME):
            raise ValueError(f"q must be a prime below {MAX_PRIME}, got {v}")
        return v

    def inputs(self) -> Dict[str, Any]:
        """The inputs echoed in the report: everything that was set, minus output plumbing."""
        return self.model_dump(exclude={"subcommand", "json_path"}, exclude_none=True)


# ================================================================== Reports

class Report(BaseModel):
    """What a subcommand produced: structured results plus a flat verdict list."""
    subcommand: str = Field(..., description="Subcommand echo")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Validated inputs")
    results: Dict[str, Any] = Field(default_factory=dict, description="Structured results per section")
    verdicts: List[Verdict] = Field(default_factory=list, description="PASS/FAIL verdicts")
    elapsed_ms: float = Field(default=0.0, ge=0, description="Wall-clock time")
    started_at: datetime = Field(default_factory=datetime.now, description="Start timestamp")

    @computed_field
    @property
    def passed(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    @property
    def failed(self) -> List[Verdict]:
        return [verdict for verdict in self.verdicts if not verdict.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "results": self.results,
            "verdicts": [verdict.model_dump(exclude_none=True) for verdict in self.verdicts],
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def to_text(self) -> str:
        """Human-readable rendering: one line per verdict and a summary line."""
        lines = [f"quotfib {self.subcommand}"]
        if self.inputs:
            lines.append("  inputs: " + ", ".join(f"{key}={value}" for key, value in sorted(self.inputs.items())))
        width = max((len(verdict.name) for verdict in self.verdicts), default=0)
        for verdict in self.verdicts:
            line = f"  [{verdict.status}] {verdict.name.ljust(width)}"
            if verdict.observed is not None:
                line += f"  {verdict.observed}"
            if not verdict.passed and verdict.message:
                line += f"  ({verdict.message})"
            lines.append(line)
        passed = len(self.verdicts) - len(self.failed)
        lines.append(f"{passed}/{len(self.verdicts)} PASS in {self.elapsed_ms / 1000:.2f}s")
        return "\n".join(lines)


def check_section(result: CheckResult) -> Dict[str, Any]:
    """The part of a CheckResult that goes under Report.results."""
    section = {
        "success": result.success,
        "data": result.data,
        "duration_ms": result.duration_ms,
    }
    if result.error_detail:
        section["error"] = result.error_detail.model_dump(exclude_none=True)
    return section
