# quotfib/core/errors.py
"""
Errors
======
Exception hierarchy raised by the algebra, module, census, chart, map and
stable-pair layers. Everything derives from QuotfibError, itself a ValueError,
so callers that only care about "bad input" can catch ValueError.
"""

from typing import Optional


class QuotfibError(ValueError):
    """Base class for every error raised by quotfib."""

    error_type: str = "quotfib_error"

    def suggestions(self) -> list[str]:
        """Suggested fixes shown alongside the error in reports."""
        return []


class FieldMismatchError(QuotfibError):
    """Arithmetic between values over different base fields."""
    error_type = "field_mismatch"


class NotAUnitError(QuotfibError):
    """Inversion of a non-unit (zero constant term, or zero scalar)."""
    error_type = "not_a_unit"


class PolynomialParseError(QuotfibError):
    """Syntax error in a polynomial expression."""
    error_type = "parse_error"

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class UndeclaredVariableError(QuotfibError):
    """A variable name that is not part of the declared variable context."""
    error_type = "undeclared_variable"

    def __init__(self, name: str, declared: tuple[str, ...]):
        self.name = name
        self.declared = declared
        super().__init__(f"Undeclared variable '{name}'. Declared: {', '.join(declared) or '(none)'}")


class IndivisibleError(QuotfibError):
    """Exact division left a remainder."""
    error_type = "indivisible"


class ShapeMismatchError(QuotfibError):
    """Incompatible moduli, ranks, matrix shapes or variable contexts."""
    error_type = "shape_mismatch"


class BudgetExceededError(QuotfibError):
    """A brute-force enumeration would exceed the configured candidate budget."""
    error_type = "budget_exceeded"

    def __init__(self, candidates: int, budget: int, suggested_shards: Optional[int] = None):
        self.candidates = candidates
        self.budget = budget
        self.suggested_shards = suggested_shards
        message = f"Enumeration needs {candidates} candidates, budget is {budget}"
        if suggested_shards:
            message += f"; split into at least {suggested_shards} shards or raise QUOTFIB_BUDGET"
        super().__init__(message)

    def suggestions(self) -> list[str]:
        hints = ["Raise the budget with the QUOTFIB_BUDGET environment variable"]
        if self.suggested_shards:
            hints.append(f"Run with --shards {self.suggested_shards}")
        return hints


class EliminationError(QuotfibError):
    """A variable named for linear elimination has no qualifying equation."""
    error_type = "elimination_error"

    def __init__(self, variable: str, reason: str):
        self.variable = variable
        super().__init__(f"Cannot eliminate '{variable}': {reason}")


class ChartError(QuotfibError):
    """Invalid chart specification or a point outside the requested chart."""
    error_type = "chart_error"


class DegenerateChartError(ChartError):
    """The Jacobian of a map vanishes identically on the chosen charts."""
    error_type = "degenerate_chart"


class NotStablePairError(QuotfibError):
    """A form matrix that is not a stable pair (zero determinant, rank-deficient beta block)."""
    error_type = "not_stable"


class LedgerError(QuotfibError):
    """Divisor bookkeeping that cannot be completed (incomplete candidate list, bad inputs)."""
    error_type = "ledger_error"
