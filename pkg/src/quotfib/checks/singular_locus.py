# quotfib/checks/singular_locus.py
"""
Singular Locus Check
====================

Affine singular points of a^3 - g(b - ac) over small prime fields. They form
the line a = b = g = 0, so there are exactly q of them.
"""

from typing import List
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime
from ..charts import degree3_target, singular_points_ff
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)

HYPERSURFACE_VARS = ("a", "b", "c", "g")


class SingularLocusConfig(CheckConfig):
    """Singular locus check configuration."""
    primes: List[int] = Field(default_factory=lambda: [2, 3, 5], description="Fields to probe")

    @field_validator('primes')
    @classmethod
    def validate_primes(cls, v):
        if not v:
            raise ValueError("At least one prime is required")
        for q in v:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v


class SingularLocusPlugin(CheckPlugin):
    """Brute-force singular points of the residual hypersurface."""

    def get_check_name(self) -> str:
        return "singular_locus"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Singular locus",
            description="a^3 - g(b - ac) has exactly q affine singular points over F_q.",
            claim="canonical singularities along a copy of P^1",
            category=CheckCategory.CHARTS,
            acceptance_id=3,
            estimated_seconds=0.2,
            tags=["charts", "finite-field"],
        )

    def get_config_model(self):
        return SingularLocusConfig

    def run_check(self, config: SingularLocusConfig) -> CheckOutcome:
        hypersurface = degree3_target().with_vars(HYPERSURFACE_VARS)
        verdicts, points = [], {}
        for q in config.primes:
            found = singular_points_ff(hypersurface, q)
            points[q] = [list(point) for point in found]
            verdicts.append(Verdict.compare(f"singular points over F_{q}", q, len(found)))
            on_line = all(a == 0 and b == 0 and g == 0 for a, b, _, g in found)
            verdicts.append(Verdict.check(f"singular points over F_{q} lie on a = b = g = 0", on_line))
        return verdicts, {"hypersurface": str(hypersurface), "vars": list(HYPERSURFACE_VARS), "points": points}


def create_plugin() -> CheckPlugin:
    return SingularLocusPlugin()
