# quotfib/checks/kernel_oracle.py
"""
Kernel Oracle Check
===================

For every pair (e, h) over F_q with e or h a unit mod t^n, the kernel of
(f, g) -> f*e + g*h found by exhausting (F_q[t]/<t^n>)^2 is the cyclic
submodule <(-h, e)>.
"""

from itertools import product
from typing import List, Sequence, Tuple
import logging
import time

from pydantic import Field, field_validator

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import TruncatedPoly, is_prime, prime_field
from ..modules import SubmoduleBasis, cyclic_kernel
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class KernelOracleConfig(CheckConfig):
    """Kernel oracle configuration."""
    q: int = Field(default=3, description="Prime field order")
    max_n: int = Field(default=3, ge=1, le=4, description="Largest truncation order")

    @field_validator('q')
    @classmethod
    def validate_q(cls, v):
        if not is_prime(v):
            raise ValueError(f"{v} is not prime")
        return v


def _truncated_product(a: Sequence[int], b: Sequence[int], q: int) -> Tuple[int, ...]:
    n = len(a)
    return tuple(sum(a[i] * b[k - i] for i in range(k + 1)) % q for k in range(n))


def brute_force_kernel(e: Sequence[int], h: Sequence[int], q: int) -> List[Tuple[int, ...]]:
    """Every (f, g) with f*e + g*h = 0 mod t^n, as concatenated coefficient vectors."""
    n = len(e)
    kernel = []
    for f in product(range(q), repeat=n):
        fe = _truncated_product(f, e, q)
        for g in product(range(q), repeat=n):
            gh = _truncated_product(g, h, q)
            if all((x + y) % q == 0 for x, y in zip(fe, gh)):
                kernel.append(f + g)
    return kernel


class KernelOraclePlugin(CheckPlugin):
    """cyclic_kernel against exhaustive search."""

    def get_check_name(self) -> str:
        return "kernel_oracle"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Kernel oracle",
            description="cyclic_kernel(e, h) equals the brute-force kernel for all unit pairs over F_3, n <= 3.",
            claim="the kernel is <(-h,e)>",
            category=CheckCategory.MODULES,
            acceptance_id=9,
            estimated_seconds=15.0,
            tags=["modules", "oracle"],
        )

    def get_config_model(self):
        return KernelOracleConfig

    def run_check(self, config: KernelOracleConfig) -> CheckOutcome:
        q = config.q
        field = prime_field(q)
        verdicts, counts = [], {}
        for n in range(1, config.max_n + 1):
            start = time.perf_counter()
            checked, mismatches = 0, []
            for e_values in product(range(q), repeat=n):
                for h_values in product(range(q), repeat=n):
                    if not (e_values[0] or h_values[0]):
                        continue
                    e = TruncatedPoly(e_values, field)
                    h = TruncatedPoly(h_values, field)
                    _, basis = cyclic_kernel(e, h)
                    brute = SubmoduleBasis(n, 2, field, brute_force_kernel(e_values, h_values, q))
                    checked += 1
                    if brute != basis or basis.dim != n:
                        mismatches.append(f"e={e}, h={h}")
            counts[n] = checked
            logger.debug(f"Kernel oracle n={n} over F_{q}: {checked} pairs in {time.perf_counter() - start:.2f}s")
            verdicts.append(Verdict.check(
                f"cyclic kernels over F_{q}, n={n} ({checked} pairs)",
                not mismatches,
                f"{len(mismatches)} mismatches, first: {mismatches[:3]}",
            ))
        return verdicts, {"q": q, "pairs_checked": counts}


def create_plugin() -> CheckPlugin:
    return KernelOraclePlugin()
