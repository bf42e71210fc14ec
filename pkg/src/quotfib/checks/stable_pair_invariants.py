# quotfib/checks/stable_pair_invariants.py
"""
Stable Pair Invariants Check
============================

Over F_2 and F_3, the Aut(E)-orbits of stable matrices for E = O^(r-1) + O(n)
and for E = O(1) + O(2) coincide with the fibres of M -> (det M, beta_M).
Randomized companions: the invariant and the edge normal form are constant
on orbits over a larger field, and the cokernel divisor agrees with the
divisor of det M.
"""

from random import Random
from typing import List, Tuple
import logging

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, NotStablePairError, QuotfibError, Verdict
from ..algebra import FieldDescriptor, is_prime, prime_field
from ..pairs import (
    DegreeProfile,
    FormMatrix,
    PairShape,
    act,
    compare_partitions,
    edge_normal_form,
    kernel_consistency,
    pair_invariant,
    random_aut_element,
    random_form_matrix,
)
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class StablePairInvariantsConfig(CheckConfig):
    """Stable pair invariants configuration."""
    edge_cases: List[Tuple[int, int]] = Field(default_factory=lambda: [(2, 1), (2, 2), (3, 1)],
                                              description="(r, n) for E = O^(r-1) + O(n)")
    include_deg3: bool = Field(default=True, description="Also compare orbits for O(1) + O(2)")
    primes: List[int] = Field(default_factory=lambda: [2, 3], description="Fields for the orbit enumeration")
    random_prime: int = Field(default=5, description="Field for the randomized invariance checks")
    samples: int = Field(default=50, ge=0, description="Random matrices per profile")

    @field_validator('primes')
    @classmethod
    def validate_primes(cls, v):
        for q in v:
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
        return v

    @field_validator('random_prime')
    @classmethod
    def validate_random_prime(cls, v):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v


def expected_edge_invariants(r: int, n: int, q: int) -> int:
    """Nonzero degree-n forms up to scale times points of Gr(r-1, r)."""
    return ((q ** (n + 1) - 1) // (q - 1)) * ((q ** r - 1) // (q - 1))


def random_stable_matrix(profile: DegreeProfile, field: FieldDescriptor, rng: Random,
                         attempts: int = 1000) -> FormMatrix:
    for _ in range(attempts):
        mat = random_form_matrix(profile, field, rng)
        try:
            pair_invariant(mat)
        except NotStablePairError:
            continue
        return mat
    raise QuotfibError(f"No stable matrix of profile {profile} found in {attempts} draws")


class StablePairInvariantsPlugin(CheckPlugin):
    """Orbit partition versus invariant partition."""

    def get_check_name(self) -> str:
        return "stable_pair_invariants"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Stable-pair invariants",
            description="Aut(E)-orbits of stable matrices are exactly the fibres of (det M, beta_M).",
            claim="hence pi is injective",
            category=CheckCategory.PAIRS,
            acceptance_id=12,
            estimated_seconds=45.0,
            tags=["pairs", "orbits", "finite-field"],
        )

    def get_config_model(self):
        return StablePairInvariantsConfig

    def _profiles(self, config: StablePairInvariantsConfig) -> List[DegreeProfile]:
        profiles = [DegreeProfile.edge(r, n) for r, n in config.edge_cases]
        if config.include_deg3:
            profiles.append(DegreeProfile.deg3())
        return profiles

    def run_check(self, config: StablePairInvariantsConfig) -> CheckOutcome:
        verdicts, comparisons = [], []
        for profile in self._profiles(config):
            for q in config.primes:
                comparison = compare_partitions(profile, q)
                comparisons.append(comparison.to_report())
                verdicts.append(Verdict.check(
                    f"orbits = invariant fibres for {profile} over F_{q}", comparison.agree,
                    f"{comparison.orbits} orbits, {comparison.invariants} invariants, "
                    f"{comparison.split_orbits} split, {comparison.shared_invariants} shared",
                ))
                if profile.shape == PairShape.EDGE:
                    expected = expected_edge_invariants(profile.size, profile.top, q)
                    verdicts.append(Verdict.compare(f"invariant count for {profile} over F_{q}",
                                                    expected, comparison.invariants))

        rng = Random(config.seed)
        field = prime_field(config.random_prime)
        for profile in self._profiles(config):
            invariant_ok, normal_ok, kernel_ok, split = True, True, True, 0
            for _ in range(config.samples):
                mat = random_stable_matrix(profile, field, rng)
                moved = act(random_aut_element(profile, field, rng), mat)
                invariant_ok = invariant_ok and pair_invariant(moved) == pair_invariant(mat)
                if profile.shape == PairShape.EDGE:
                    normal_ok = normal_ok and edge_normal_form(moved)[0] == edge_normal_form(mat)[0]
                if profile.size == 2:
                    try:
                        consistent = kernel_consistency(mat)
                    except QuotfibError:
                        continue
                    split += 1
                    kernel_ok = kernel_ok and consistent
            suffix = f"{profile} over F_{config.random_prime}"
            verdicts.append(Verdict.check(f"invariant is Aut(E)-invariant, {suffix}", invariant_ok))
            if profile.shape == PairShape.EDGE:
                verdicts.append(Verdict.check(f"normal form is Aut(E)-invariant, {suffix}", normal_ok))
            if profile.size == 2:
                verdicts.append(Verdict.check(f"cokernel divisor = det divisor, {suffix} ({split} split)",
                                              kernel_ok))

        return verdicts, {"comparisons": comparisons}


def create_plugin() -> CheckPlugin:
    return StablePairInvariantsPlugin()
