# quotfib/checks/census_closed_form.py
"""
Census Closed-Form Check
========================

Brute-force census of the t-invariant subspaces of (F_q[t]/<t^n>)^2 against
|Q_n| = (q+1) q^(n-1) + |Q_(n-2)| and against the stratum counts
(q+1) q^(n-2m-1), a single point when n = 2m.
"""

from typing import List, Tuple
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime
from ..modules import ModuleType
from ..census import census, closed_form_count, stratum_count, strata_dimension_table
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)

DEFAULT_CASES = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]


class CensusClosedFormConfig(CheckConfig):
    """Census check configuration."""
    pairs: List[Tuple[int, int]] = Field(default_factory=lambda: list(DEFAULT_CASES),
                                         description="(n, q) cases, rank 2")
    shards: int = Field(default=1, ge=1, description="Worker processes per census")

    @field_validator('pairs')
    @classmethod
    def validate_pairs(cls, v):
        for n, q in v:
            if n < 1:
                raise ValueError(f"n must be positive, got {n}")
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v


class CensusClosedFormPlugin(CheckPlugin):
    """Census totals and strata against the closed forms."""

    def get_check_name(self) -> str:
        return "census_closed_form"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Census vs closed form",
            description="Invariant-subspace census totals and per-stratum counts match the closed forms.",
            claim="A^(n-2m-1)-bundle over P^1",
            category=CheckCategory.CENSUS,
            acceptance_id=7,
            estimated_seconds=30.0,
            tags=["census", "finite-field"],
        )

    def get_config_model(self):
        return CensusClosedFormConfig

    def run_check(self, config: CensusClosedFormConfig) -> CheckOutcome:
        verdicts, reports = [], []
        for n, q in config.pairs:
            report = census(n, 2, q, shards=config.shards)
            reports.append(report.to_report())
            verdicts.append(Verdict.compare(f"|Q_{n}(F_{q})|", closed_form_count(n, q), report.total))
            for m in range(n // 2 + 1):
                module_type = ModuleType.of(*(part for part in (n - m, m) if part))
                verdicts.append(Verdict.compare(
                    f"stratum {module_type} over F_{q}", stratum_count(n, m, q), report.count(module_type),
                ))
        strata = {n: strata_dimension_table(2, n).to_report() for n in sorted({n for n, _ in config.pairs})}
        return verdicts, {"census": reports, "strata": strata}


def create_plugin() -> CheckPlugin:
    return CensusClosedFormPlugin()
