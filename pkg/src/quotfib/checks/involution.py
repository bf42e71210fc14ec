# quotfib/checks/involution.py
"""
Involution Check
================

phi composed with itself, over QQ: after clearing the monomial content and
the known primes the result is the identity and the removed factor is
exactly m1^6 m4^2.
"""

import logging

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import MultiPoly, rationals
from ..birational import SOURCE_VARS, compose, phi_standard
from ..plugins import CheckOutcome, CheckPlugin

logger = logging.getLogger(__name__)


class InvolutionPlugin(CheckPlugin):
    """phi o phi = id with cleared factor m1^6 m4^2."""

    def get_check_name(self) -> str:
        return "involution"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Involution",
            description="compose(phi, phi) is the identity and the cleared factor is m1^6 m4^2.",
            claim="one has phi^2=id",
            category=CheckCategory.BIRATIONAL,
            acceptance_id=4,
            estimated_seconds=0.1,
            tags=["birational", "symbolic"],
        )

    def run_check(self, config: CheckConfig) -> CheckOutcome:
        field = rationals()
        phi = phi_standard(field)
        square = compose(phi, phi)
        m1, _, _, m4 = MultiPoly.gens(SOURCE_VARS, field)
        expected_factor = m1 ** 6 * m4 ** 2

        image = tuple(str(c) for c in phi.evaluate([1, 1, 1, 1]))
        verdicts = [
            Verdict.check("phi o phi is the identity", square.is_identity(), f"phi o phi = {square}"),
            Verdict.compare("cleared factor", str(expected_factor), str(square.cleared)),
            Verdict.compare("phi(1:1:1:1)", ("1", "-1", "0", "1"), image),
        ]
        data = {
            "phi": str(phi),
            "composite": str(square),
            "cleared": str(square.cleared),
        }
        return verdicts, data


def create_plugin() -> CheckPlugin:
    return InvolutionPlugin()
