# quotfib/core/__init__.py
"""
Core Framework Components
=========================

Shared models, errors and settings for quotfib.

Public API:
    Result Models:
        - Verdict: A single named PASS/FAIL comparison
        - CheckResult: Result of running one check, validated for consistency
        - CheckInfo: Check metadata used for discovery and report headers
        - ErrorDetail: Structured error carried by failed results

    Configuration:
        - CheckConfig: Base configuration model that checks extend
        - enumeration_budget: Brute-force candidate cap (QUOTFIB_BUDGET)

    Enums:
        - CheckCategory: Which layer a check exercises
        - VerdictStatus: PASS / FAIL
        - ResultStatus: Operation result statuses

    Errors:
        - QuotfibError and its subclasses (see quotfib.core.errors)

Example Usage:
    ```python
    from quotfib.core import Verdict, create_check_result

    verdicts = [Verdict.compare("census total", 7, 7)]
    result = create_check_result("census", verdicts, data={"total": 7})
    assert result.success
    ```
"""

from .models import (
    # Result Models
    Verdict,
    CheckResult,
    CheckInfo,
    ErrorDetail,

    # Configuration
    CheckConfig,
    DEFAULT_SEED,

    # Enums
    CheckCategory,
    VerdictStatus,
    ResultStatus,

    # Utility Functions
    create_check_result,
    create_error_result,
    normalize_tags,
)

from .errors import (
    QuotfibError,
    FieldMismatchError,
    NotAUnitError,
    PolynomialParseError,
    UndeclaredVariableError,
    IndivisibleError,
    ShapeMismatchError,
    BudgetExceededError,
    EliminationError,
    ChartError,
    DegenerateChartError,
    NotStablePairError,
    LedgerError,
)

from .settings import enumeration_budget, BUDGET_ENV_VAR, DEFAULT_ENUMERATION_BUDGET, MAX_PRIME

# Version information - imported from project metadata
try:
    from importlib.metadata import version, PackageNotFoundError
    try:
        __version__ = version("quotfib")
    except PackageNotFoundError:
        # Fallback during development when package isn't installed
        __version__ = "0.1.0"
except ImportError:
    __version__ = "0.1.0"

__all__ = [
    # Result Models
    "Verdict",
    "CheckResult",
    "CheckInfo",
    "ErrorDetail",

    # Configuration
    "CheckConfig",
    "DEFAULT_SEED",
    "enumeration_budget",
    "BUDGET_ENV_VAR",
    "DEFAULT_ENUMERATION_BUDGET",
    "MAX_PRIME",

    # Enums
    "CheckCategory",
    "VerdictStatus",
    "ResultStatus",

    # Utility Functions
    "create_check_result",
    "create_error_result",
    "normalize_tags",

    # Errors
    "QuotfibError",
    "FieldMismatchError",
    "NotAUnitError",
    "PolynomialParseError",
    "UndeclaredVariableError",
    "IndivisibleError",
    "ShapeMismatchError",
    "BudgetExceededError",
    "EliminationError",
    "ChartError",
    "DegenerateChartError",
    "NotStablePairError",
    "LedgerError",
]
