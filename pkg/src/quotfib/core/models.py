# quotfib/core/models.py
"""
Core Models
===========
Core Pydantic models shared by every quotfib layer.
Provides verdicts, check results, check metadata, structured errors and the
base configuration model that individual checks extend.
"""

from typing import Dict, Any, List, Optional
from enum import Enum
from pydantic import BaseModel, Field, field_validator, model_validator, computed_field
import logging

from .errors import QuotfibError

logger = logging.getLogger(__name__)


# ================================================================== Enums

class CheckCategory(str, Enum):
    """Which part of the library a check exercises."""
    ALGEBRA = "algebra"
    MODULES = "modules"
    CENSUS = "census"
    CHARTS = "charts"
    BIRATIONAL = "birational"
    PAIRS = "pairs"


class VerdictStatus(str, Enum):
    """Outcome of a single verification."""
    PASS = "PASS"
    FAIL = "FAIL"


class ResultStatus(str, Enum):
    """Result status for operations."""
    SUCCESS = "success"
    ERROR = "error"


# ================================================================== Configuration

DEFAULT_SEED = 20240501


def normalize_tags(tags: List[str]) -> List[str]:
    """Strip, lowercase and de-duplicate tags, keeping first occurrences."""
    clean_tags = []
    seen = set()
    for tag in tags or []:
        clean_tag = tag.strip().lower()
        if clean_tag and clean_tag not in seen:
            clean_tags.append(clean_tag)
            seen.add(clean_tag)
    return clean_tags


class CheckConfig(BaseModel):
    """
    Base check configuration model.
    Checks extend this with their own parameters (primes, moduli, sample sizes).
    """
    seed: int = Field(default=DEFAULT_SEED, description="Seed for randomized property checks")
    tags: List[str] = Field(default_factory=list, description="Configuration tags")

    model_config = {
        "extra": "forbid",
    }

    @field_validator('tags')
    @classmethod
    def validate_tags(cls, v):
        """Clean and de-duplicate tags."""
        return normalize_tags(v)


# ================================================================== Result Models

class Verdict(BaseModel):
    """A single named PASS/FAIL comparison of an observed value against an expectation."""
    name: str = Field(..., description="What was verified")
    status: VerdictStatus = Field(..., description="PASS or FAIL")
    expected: Optional[str] = Field(None, description="Expected value, as text")
    observed: Optional[str] = Field(None, description="Observed value, as text")
    message: Optional[str] = Field(None, description="Explanation when the verdict fails")

    model_config = {
        "use_enum_values": True,
        "frozen": True,
    }

    @property
    def passed(self) -> bool:
        return self.status == VerdictStatus.PASS.value

    @classmethod
    def compare(cls, name: str, expected: Any, observed: Any, message: Optional[str] = None) -> "Verdict":
        """Verdict from an equality comparison; values are recorded as text."""
        ok = expected == observed
        return cls(
            name=name,
            status=VerdictStatus.PASS if ok else VerdictStatus.FAIL,
            expected=str(expected),
            observed=str(observed),
            message=None if ok else (message or f"expected {expected}, observed {observed}"),
        )

    @classmethod
    def check(cls, name: str, condition: bool, message: Optional[str] = None) -> "Verdict":
        """Verdict from a boolean condition."""
        return cls(
            name=name,
            status=VerdictStatus.PASS if condition else VerdictStatus.FAIL,
            message=None if condition else (message or "condition does not hold"),
        )


class ErrorDetail(BaseModel):
    """Structured error with detailed information."""
    error_type: str = Field(..., description="Type of error")
    message: str = Field(..., description="Error message")
    details: Optional[Dict[str, Any]] = Field(None, description="Additional error details")
    suggestions: List[str] = Field(default_factory=list, description="Suggested fixes")

    model_config = {
        "extra": "forbid",
    }

    @classmethod
    def from_exception(cls, exc: Exception) -> "ErrorDetail":
        """Build an error record from a raised exception."""
        if isinstance(exc, QuotfibError):
            return cls(error_type=exc.error_type, message=str(exc), suggestions=exc.suggestions())
        return cls(error_type=type(exc).__name__, message=str(exc))


class CheckResult(BaseModel):
    """
    Result of running one check.
    Used consistently by the runner, the CLI and the JSON reports.
    """
    check_name: str = Field(..., description="Registered check name")
    success: bool = Field(..., description="Whether every verdict passed")
    status: ResultStatus = Field(default=ResultStatus.SUCCESS, description="Result status")
    message: Optional[str] = Field(None, description="Human-readable message")
    error: Optional[str] = Field(None, description="Error message if failed")
    error_detail: Optional[ErrorDetail] = Field(None, description="Structured error if an exception was raised")
    data: Dict[str, Any] = Field(default_factory=dict, description="Structured results")
    verdicts: List[Verdict] = Field(default_factory=list, description="Individual PASS/FAIL verdicts")
    duration_ms: Optional[float] = Field(None, ge=0, description="Check duration in milliseconds")

    model_config = {
        "use_enum_values": True
    }

    @model_validator(mode='after')
    def validate_result(self):
        """Validate result consistency."""
        if not self.success and self.status == ResultStatus.SUCCESS.value:
            self.status = ResultStatus.ERROR.value

        if not self.success and not self.error:
            raise ValueError("Error message required when success=False")
        if self.success and self.error:
            raise ValueError("Cannot have error when success=True")
        if self.success and any(not verdict.passed for verdict in self.verdicts):
            raise ValueError("Cannot report success with failing verdicts")

        return self

    def __bool__(self):
        """Allow using CheckResult in boolean context."""
        return self.success

    @computed_field
    @property
    def failed_verdicts(self) -> List[str]:
        """Names of the verdicts that failed."""
        return [verdict.name for verdict in self.verdicts if not verdict.passed]


class CheckInfo(BaseModel):
    """
    Check metadata.
    Used for plugin discovery and for the human-readable report header.
    """
    name: str = Field(..., description="Display name of the check")
    description: str = Field(..., description="What the check verifies")
    claim: str = Field(..., description="The statement being reproduced, quoted briefly")
    category: CheckCategory = Field(..., description="Check category")
    acceptance_id: Optional[int] = Field(None, ge=1, description="Acceptance criterion number")
    estimated_seconds: float = Field(default=1.0, gt=0, description="Expected runtime on a laptop")
    tags: List[str] = Field(default_factory=list, description="Tags for discovery")

    model_config = {
        "use_enum_values": True
    }

    @field_validator('tags')
    @classmethod
    def validate_tags(cls, v):
        """Clean and validate tags."""
        return normalize_tags(v)


# ================================================================== Utility Functions

def create_check_result(check_name: str, verdicts: List[Verdict], data: Dict[str, Any] = None,
                        message: str = None, duration_ms: float = None) -> CheckResult:
    """Result whose success is decided by its verdicts."""
    failed = [verdict for verdict in verdicts if not verdict.passed]
    if failed:
        logger.warning(f"Check {check_name}: {len(failed)} failing verdict(s): "
                       f"{', '.join(verdict.name for verdict in failed)}")
        return CheckResult(
            check_name=check_name,
            success=False,
            status=ResultStatus.ERROR,
            message=message,
            error="; ".join(f"{verdict.name}: {verdict.message}" for verdict in failed),
            data=data or {},
            verdicts=verdicts,
            duration_ms=duration_ms,
        )
    return CheckResult(
        check_name=check_name,
        success=True,
        status=ResultStatus.SUCCESS,
        message=message,
        data=data or {},
        verdicts=verdicts,
        duration_ms=duration_ms,
    )


def create_error_result(check_name: str, exc: Exception, duration_ms: float = None) -> CheckResult:
    """Result for a check that raised instead of producing verdicts."""
    detail = ErrorDetail.from_exception(exc)
    return CheckResult(
        check_name=check_name,
        success=False,
        status=ResultStatus.ERROR,
        error=detail.message,
        error_detail=detail,
        verdicts=[Verdict(name=check_name, status=VerdictStatus.FAIL, message=detail.message)],
        duration_ms=duration_ms,
    )
