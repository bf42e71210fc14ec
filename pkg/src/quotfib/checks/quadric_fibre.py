# quotfib/checks/quadric_fibre.py
"""
Quadric Fibre Check
===================

The quadric cone xz + y^2 = 0 in P^3 has as many F_q-points as Q_2, its two
charts and the vertex account for all of them, and the chart change
(y, u) -> (1/y, -u/y^2) is the n = 2 chart transition.
"""

from random import Random
from typing import List
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime, prime_field
from ..modules import chart_transition
from ..census import closed_form_count, quadric_chart_transition, quadric_cone_count, quadric_cone_decomposition
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class QuadricFibreConfig(CheckConfig):
    """Quadric fibre check configuration."""
    primes: List[int] = Field(default_factory=lambda: [2, 3, 5], description="Fields to count over")
    samples: int = Field(default=20, ge=0, description="Random overlap points per field for the chart change")

    @field_validator('primes')
    @classmethod
    def validate_primes(cls, v):
        for q in v:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v


class QuadricFibrePlugin(CheckPlugin):
    """Point counts of the degree-2 fibre."""

    def get_check_name(self) -> str:
        return "quadric_fibre"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Quadric fibre",
            description="quadric_cone_count(q) = |Q_2(F_q)| with the chart decomposition of the cone.",
            claim="singular quadric in P^3",
            category=CheckCategory.CENSUS,
            acceptance_id=8,
            estimated_seconds=0.2,
            tags=["census", "quadric"],
        )

    def get_config_model(self):
        return QuadricFibreConfig

    def run_check(self, config: QuadricFibreConfig) -> CheckOutcome:
        rng = Random(config.seed)
        verdicts, decompositions = [], []
        for q in config.primes:
            count = quadric_cone_count(q)
            verdicts.append(Verdict.compare(f"cone points over F_{q}", closed_form_count(2, q), count))

            decomposition = quadric_cone_decomposition(q)
            decompositions.append(decomposition.model_dump())
            verdicts.append(Verdict.check(f"chart decomposition over F_{q}", decomposition.consistent,
                                          f"{decomposition.model_dump()}"))
            verdicts.append(Verdict.compare(f"singular points over F_{q}", 1, decomposition.singular))

            field = prime_field(q)
            agree = True
            for _ in range(config.samples):
                y, u = field(rng.randrange(1, q)), field(rng.randrange(q))
                agree = agree and quadric_chart_transition(y, u) == tuple(chart_transition((y, u), field))
            verdicts.append(Verdict.check(f"cone chart change is the n=2 transition over F_{q}", agree))
        return verdicts, {"decompositions": decompositions}


def create_plugin() -> CheckPlugin:
    return QuadricFibrePlugin()
