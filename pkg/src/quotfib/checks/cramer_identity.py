# quotfib/checks/cramer_identity.py
"""
Cramer Identity Check
=====================

adj(M) * M = det(M) * I for the worked example [[x^2, y^2], [x, y]] and for
random matrices with row degrees (2; 1) over a small prime field.
"""

from random import Random
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import BinaryForm, is_prime, prime_field, rationals
from ..birational import adjugate_compose_check, determinant, random_form_matrix
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)

WORKED_EXAMPLE = (("x^2", "y^2"), ("x", "y"))


class CramerIdentityConfig(CheckConfig):
    """Cramer identity configuration."""
    samples: int = Field(default=100, ge=0, description="Random matrices")
    q: int = Field(default=5, description="Field for the random matrices")

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v


def worked_example():
    field = rationals()
    return [[BinaryForm.parse(text, 2 - i, field) for text in row] for i, row in enumerate(WORKED_EXAMPLE)]


class CramerIdentityPlugin(CheckPlugin):
    """Adjugate composition."""

    def get_check_name(self) -> str:
        return "cramer_identity"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Cramer identity",
            description="adj(M) M = det(M) I on the worked example and random (2; 1) matrices.",
            claim="is essentially Cramer's rule",
            category=CheckCategory.BIRATIONAL,
            acceptance_id=13,
            estimated_seconds=1.0,
            tags=["pairs", "symbolic"],
        )

    def get_config_model(self):
        return CramerIdentityConfig

    def run_check(self, config: CramerIdentityConfig) -> CheckOutcome:
        example = worked_example()
        verdicts = [
            adjugate_compose_check(example),
            Verdict.compare("det of the worked example", "x^2*y - x*y^2", str(determinant(example))),
        ]

        rng = Random(config.seed)
        field = prime_field(config.q)
        failures = 0
        for _ in range(config.samples):
            if not adjugate_compose_check(random_form_matrix((2, 1), field, rng)).passed:
                failures += 1
        verdicts.append(Verdict.compare(f"random (2; 1) matrices over F_{config.q} failing", 0, failures))
        return verdicts, {"example_det": str(determinant(example)), "samples": config.samples}


def create_plugin() -> CheckPlugin:
    return CramerIdentityPlugin()
