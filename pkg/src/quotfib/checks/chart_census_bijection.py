# quotfib/checks/chart_census_bijection.py
"""
Chart/Census Bijection Check
============================

Solutions of the chart equations over F_q against the census subspaces
complementary to the chart's complement Span(u, v, vt, ...).
"""

from typing import List, Tuple
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime
from ..charts import (
    ChartSpec,
    chart_census_bijection,
    chart_point_count_ff,
    complementary_subspace_count,
    generate_invariance_equations,
)
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class ChartCensusBijectionConfig(CheckConfig):
    """Chart/census bijection configuration."""
    cases: List[Tuple[int, int]] = Field(default_factory=lambda: [(3, 2), (2, 2), (2, 3)],
                                         description="(n, q) cases")

    @field_validator('cases')
    @classmethod
    def validate_cases(cls, v):
        for n, q in v:
            if not 1 <= n <= 5:
                raise ValueError(f"Standard charts exist for 1 <= n <= 5, got {n}")
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v


class ChartCensusBijectionPlugin(CheckPlugin):
    """Chart solutions are exactly the census subspaces in the chart."""

    def get_check_name(self) -> str:
        return "chart_census_bijection"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Chart/census bijection",
            description="F_2-solutions of the 9-equation system match the census subspaces in the chart.",
            claim="choose W=Span(ut,ut^2,vt^2)",
            category=CheckCategory.CHARTS,
            acceptance_id=11,
            estimated_seconds=2.0,
            tags=["charts", "census", "finite-field"],
        )

    def get_config_model(self):
        return ChartCensusBijectionConfig

    def run_check(self, config: ChartCensusBijectionConfig) -> CheckOutcome:
        verdicts, counts = [], []
        for n, q in config.cases:
            chart = ChartSpec.standard(n)
            solutions = chart_point_count_ff(generate_invariance_equations(chart), q)
            subspaces = complementary_subspace_count(chart, q)
            counts.append({"n": n, "q": q, "solutions": solutions, "subspaces": subspaces})
            verdicts.append(Verdict.compare(f"chart solutions vs census, n={n}, F_{q}", subspaces, solutions))
            verdicts.append(Verdict.check(f"solutions span distinct chart subspaces, n={n}, F_{q}",
                                          chart_census_bijection(chart, q)))
        return verdicts, {"counts": counts}


def create_plugin() -> CheckPlugin:
    return ChartCensusBijectionPlugin()
