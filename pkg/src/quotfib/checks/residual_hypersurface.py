# quotfib/checks/residual_hypersurface.py
"""
Residual Hypersurface Check
===========================

Eliminates d, e, f, h from the nine chart equations, substitutes i = -a and
checks that every surviving generator is 0 or +-(a^3 - g(b - ac)). Also runs
the g = 0 branch count and the lift of the hypersurface back to the chart.
"""

from typing import List
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime
from ..charts import collected_lift_check, degree3_pipeline, g_zero_branch_count
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class ResidualHypersurfaceConfig(CheckConfig):
    """Residual hypersurface check configuration."""
    branch_primes: List[int] = Field(default_factory=lambda: [2, 3],
                                     description="Primes for the g = 0 branch and lift probes")

    @field_validator('branch_primes')
    @classmethod
    def validate_primes(cls, v):
        for q in v:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v


def _is_sign(multiplier) -> bool:
    return multiplier is not None and (multiplier.is_zero() or multiplier.is_one() or (-multiplier).is_one())


class ResidualHypersurfacePlugin(CheckPlugin):
    """Elimination pipeline down to a^3 = g(b - ac)."""

    def get_check_name(self) -> str:
        return "residual_hypersurface"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Residual hypersurface",
            description="Linear elimination of (d, e, f, h) and i -> -a leave multiples in {0, +-1} of the target.",
            claim="can be written as a^3=g(b-ac)",
            category=CheckCategory.CHARTS,
            acceptance_id=2,
            estimated_seconds=0.5,
            tags=["charts", "elimination"],
        )

    def get_config_model(self):
        return ResidualHypersurfaceConfig

    def run_check(self, config: ResidualHypersurfaceConfig) -> CheckOutcome:
        _, result, reduction = degree3_pipeline()
        verdicts = [
            Verdict.check("every generator is a multiple of the target", reduction.passed,
                          f"images {reduction.images}"),
            Verdict.check("multipliers lie in {0, 1, -1}", all(_is_sign(m) for m in reduction.multipliers),
                          f"multipliers {[str(m) for m in reduction.multipliers]}"),
        ]

        branches, lifts = {}, {}
        for q in config.branch_primes:
            branches[q] = g_zero_branch_count(q)
            verdicts.append(Verdict.compare(f"g = 0 branch over F_{q}", q * q, branches[q]))
            count, lifted = collected_lift_check(q)
            lifts[q] = count
            verdicts.append(Verdict.check(f"hypersurface points over F_{q} lift to the chart", lifted))

        data = {
            "elimination": result.to_report(),
            "reduction": reduction.to_report(),
            "g_zero_branch": branches,
            "hypersurface_points": lifts,
        }
        return verdicts, data


def create_plugin() -> CheckPlugin:
    return ResidualHypersurfacePlugin()
