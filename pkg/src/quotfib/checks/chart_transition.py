# quotfib/checks/chart_transition.py
"""
Chart Transition Check
======================

The U-to-V transition m(t) -> 1/m(t) mod t^n is an involution on the
overlap, agrees with (1/m1, -m2/m1^2) for n = 2, and matches the chart
coordinates read off the submodule <(m(t), 1)> itself.
"""

from fractions import Fraction
from itertools import product
from random import Random
from typing import List
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import is_prime, prime_field, rationals
from ..modules import chart_coords, chart_transition, submodule_from_u_coords
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class ChartTransitionConfig(CheckConfig):
    """Chart transition check configuration."""
    samples: int = Field(default=1000, ge=1, description="Random rational inputs per n")
    moduli: List[int] = Field(default_factory=lambda: [2, 3], description="Truncation orders")
    bound: int = Field(default=20, ge=1, description="Numerators and denominators are drawn from [-bound, bound]")
    witness_prime: int = Field(default=5, description="Field for the submodule cross-check")

    @field_validator('witness_prime')
    @classmethod
    def validate_prime(cls, v):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v


def _random_fraction(rng: Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value or not nonzero:
            return value


class ChartTransitionPlugin(CheckPlugin):
    """Involution property and the degree-2 formula."""

    def get_check_name(self) -> str:
        return "chart_transition"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Chart transition",
            description="m -> 1/m mod t^n is involutive and equals (1/m1, -m2/m1^2) for n = 2.",
            claim="(1/m_1, -m_2/m_1^2)",
            category=CheckCategory.MODULES,
            acceptance_id=10,
            estimated_seconds=1.0,
            tags=["modules", "charts"],
        )

    def get_config_model(self):
        return ChartTransitionConfig

    def run_check(self, config: ChartTransitionConfig) -> CheckOutcome:
        rng = Random(config.seed)
        field = rationals()
        verdicts = []
        for n in config.moduli:
            involutive, formula = True, True
            for _ in range(config.samples):
                m = [field(_random_fraction(rng, config.bound, nonzero=(i == 0))) for i in range(n)]
                l = chart_transition(m, field)
                involutive = involutive and tuple(chart_transition(l, field)) == tuple(m)
                if n == 2:
                    formula = formula and tuple(l) == (m[0].inverse(), -m[1] / (m[0] * m[0]))
            verdicts.append(Verdict.check(f"transition is an involution, n={n}", involutive))
            if n == 2:
                verdicts.append(Verdict.check("n=2 transition is (1/m1, -m2/m1^2)", formula))

        # the transition read off the submodule itself
        q = config.witness_prime
        ff = prime_field(q)
        for n in config.moduli:
            agree = True
            for head in range(1, q):
                for tail in product(range(q), repeat=n - 1):
                    m = (head,) + tail
                    coords = chart_coords(submodule_from_u_coords(m, ff))
                    agree = agree and coords.in_v and tuple(coords.v_coords) == tuple(chart_transition(m, ff))
            verdicts.append(Verdict.check(f"V-chart coordinates of <(m, 1)> over F_{q}, n={n}", agree))

        return verdicts, {"samples": config.samples, "moduli": list(config.moduli)}


def create_plugin() -> CheckPlugin:
    return ChartTransitionPlugin()
