# quotfib/checks/pullback_table.py
"""
Pullback Table Check
====================

Decomposes phi^*H_i along A1..A4 and G, matches the golden table, checks
that every decomposition has degree 3 and spot-checks the multiplicities
on random F_q points.
"""

from random import Random
from typing import Optional
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime
from ..birational import parse_divisor, phi_pullback_table, phi_standard, spot_check_pullback, standard_primes
from ..plugins import CheckOutcome, CheckPlugin
from .golden import PHI_PULLBACKS_FILE, golden_table

logger = logging.getLogger(__name__)


class PullbackTableConfig(CheckConfig):
    """Pullback table check configuration."""
    spot_check_prime: int = Field(default=7, description="Field used for the pointwise spot check")
    samples: int = Field(default=100, ge=0, description="Random points per component")
    golden_dir: Optional[str] = Field(None, description="Directory overriding the packaged golden files")

    @field_validator('spot_check_prime')
    @classmethod
    def validate_prime(cls, v):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v


class PullbackTablePlugin(CheckPlugin):
    """phi^*H_i decompositions."""

    def get_check_name(self) -> str:
        return "pullback_table"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Pullback table",
            description="phi^*H1..H4 = 2A1+A4, A1+A2+A4, A4+G, 3A1 with degree sums 3.",
            claim="phi^*H_4 = 3A_1",
            category=CheckCategory.BIRATIONAL,
            acceptance_id=5,
            estimated_seconds=1.0,
            tags=["birational", "golden"],
        )

    def get_config_model(self):
        return PullbackTableConfig

    def run_check(self, config: PullbackTableConfig) -> CheckOutcome:
        primes = standard_primes()
        phi = phi_standard()
        table = phi_pullback_table()
        golden = {name: parse_divisor(text, primes) for name, text in golden_table(PHI_PULLBACKS_FILE, config.golden_dir)}

        verdicts = [Verdict.compare("hyperplanes in the golden table", sorted(table), sorted(golden))]
        rng = Random(config.seed)
        for name, divisor in table.items():
            if name in golden:
                verdicts.append(Verdict.compare(f"phi^*{name}", str(golden[name]), str(divisor)))
            verdicts.append(Verdict.compare(f"deg phi^*{name}", phi.degree, divisor.degree()))
            if config.samples:
                ok = spot_check_pullback(phi, primes[name], divisor, config.spot_check_prime,
                                         samples=config.samples, rng=rng)
                verdicts.append(Verdict.check(f"phi^*{name} vanishing orders over F_{config.spot_check_prime}", ok))

        data = {"pullbacks": {name: str(divisor) for name, divisor in table.items()},
                "degrees": {name: divisor.degree() for name, divisor in table.items()}}
        return verdicts, data


def create_plugin() -> CheckPlugin:
    return PullbackTablePlugin()
