# quotfib/birational/ledger.py
"""
Discrepancy Ledger
==================
Formal bookkeeping of the log canonical class under the involution:

    f^*(K_Y + H1 + H2 + H3 + H4) = K_X + sum_E d_E E + sum_i f^*H_i

where d_E are the discrepancy coefficients of f^*K_Y - K_X. K_Y + sum H_i is
the zero divisor, so the total must have degree 0. For the standard map the
total reads K_X + (a+6)A1 + A2 + (b+3)A4 + G and the exceptional primes must
carry coefficients adding up to 1.
"""

from typing import Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from pydantic import BaseModel, Field

from ..core.errors import LedgerError
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import FieldDescriptor, rationals
from .divisors import Divisor, PrimeDivisor, canonical_class, pullback_divisor, standard_primes
from .maps import SOURCE_VARS, TARGET_VARS, ProjectiveMap, discrepancy_coefficient, jacobian_order, phi_standard

logger = logging.getLogger(__name__)

# (prime, source chart, target chart) on which the Jacobian is computed
PHI_EXCEPTIONAL_CHARTS = (("A1", 3, 3), ("A4", 2, 3))
INVERSE_EXCEPTIONAL_CHARTS = (("H1", 3, 3), ("H4", 2, 3))


class LedgerReport(BaseModel):
    """Outcome of one ledger computation."""
    canonical: str = Field(..., description="Canonical class of the source")
    pullbacks: Dict[str, str] = Field(default_factory=dict, description="Target prime -> pulled-back divisor")
    jacobian_orders: Dict[str, int] = Field(default_factory=dict, description="Raw Jacobian orders along exceptional primes")
    discrepancies: Dict[str, int] = Field(default_factory=dict, description="Coefficients of f^*K_Y - K_X")
    coefficients: Dict[str, int] = Field(default_factory=dict, description="Coefficients of the total")
    total: str = Field(..., description="The pulled-back log canonical class")
    degree_terms: List[int] = Field(default_factory=list, description="Degree contribution per prime")
    degree_sum: int
    constraint_primes: Tuple[str, ...] = Field(default_factory=tuple)
    constraint_value: int = 0
    constraint_target: int = 1

    @property
    def degree_ok(self) -> bool:
        return self.degree_sum == 0

    @property
    def constraint_ok(self) -> bool:
        return not self.constraint_primes or self.constraint_value == self.constraint_target

    @property
    def passed(self) -> bool:
        return self.degree_ok and self.constraint_ok

    @property
    def degree_identity(self) -> str:
        """e.g. '-4 + 0 + 1 + 1 + 2 = 0'"""
        text = " ".join(f"{'-' if t < 0 else '+'} {abs(t)}" for t in self.degree_terms)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        return f"{text} = {self.degree_sum}"

    @property
    def constraint_identity(self) -> str:
        lhs = " + ".join(self.constraint_primes)
        relation = "=" if self.constraint_ok else "≠"
        return f"{lhs}: {self.constraint_value} {relation} {self.constraint_target}"

    def require(self) -> "LedgerReport":
        """Raise LedgerError unless both the degree identity and the constraint hold."""
        if not self.degree_ok:
            raise LedgerError(f"Degree identity fails: {self.degree_identity}")
        if not self.constraint_ok:
            raise LedgerError(f"Coefficient constraint fails: {self.constraint_identity}")
        return self

    def to_report(self) -> dict:
        return {
            "canonical": self.canonical,
            "pullbacks": dict(self.pullbacks),
            "jacobian_orders": dict(self.jacobian_orders),
            "discrepancies": dict(self.discrepancies),
            "total": self.total,
            "degree_identity": self.degree_identity,
            "degree_ok": self.degree_ok,
            "constraint": self.constraint_identity,
            "constraint_ok": self.constraint_ok,
            "passed": self.passed,
        }


def _resolve(prime, registry: Mapping[str, PrimeDivisor]) -> PrimeDivisor:
    if isinstance(prime, PrimeDivisor):
        return prime
    if prime not in registry:
        raise LedgerError(f"Unknown prime divisor {prime!r}")
    return registry[prime]


def discrepancy_ledger(pullbacks: Mapping[str, Divisor], discrepancies: Mapping, canonical: str = "K_X",
                       constraint: Sequence[str] = ("A1", "A4"), constraint_target: int = 1,
                       jacobian_orders: Optional[Mapping[str, int]] = None) -> LedgerReport:
    """
    Combine the hyperplane pullbacks with the discrepancy coefficients.

    `discrepancies` are coefficients of f^*K_Y - K_X, not raw Jacobian
    orders. For a prime A and target chart H the two are related by
    coefficient = -4 * mult_A(f^*H) - ord_A(Jac); see
    `discrepancy_coefficient`. For phi the raw orders {A1: -6, A4: +2}
    become {A1: -6, A4: -2}. Raw orders passed here fail the constraint.
    `jacobian_orders` is only echoed in the report.

    With the standard pullbacks and (a, b) = (-6, -2) the total is
    K_X + A2 + A4 + G. Identity inputs (0, 0) give A1 + A4: 9 ≠ 1.
    """
    registry = standard_primes()
    total = Divisor.of(canonical_class(canonical))
    for prime, coeff in discrepancies.items():
        total = total + Divisor.of(_resolve(prime, registry), coeff)
    for divisor in pullbacks.values():
        total = total + divisor

    shown = set(total.names()) | {name for name in constraint}
    for prime in discrepancies:
        shown.add(prime.name if isinstance(prime, PrimeDivisor) else prime)
    degree_terms = []
    for name in sorted(shown, key=lambda n: (0 if n.startswith("K_") else 1, n)):
        prime = total.prime(name) if total.coefficient(name) else _resolve(name, registry)
        degree_terms.append(total.coefficient(name) * prime.degree)

    report = LedgerReport(
        canonical=canonical,
        pullbacks={name: str(divisor) for name, divisor in pullbacks.items()},
        jacobian_orders=dict(jacobian_orders or {}),
        discrepancies={(p.name if isinstance(p, PrimeDivisor) else p): c for p, c in discrepancies.items()},
        coefficients=total.to_report(),
        total=str(total),
        degree_terms=degree_terms,
        degree_sum=total.degree(),
        constraint_primes=tuple(constraint),
        constraint_value=sum(total.coefficient(name) for name in constraint),
        constraint_target=constraint_target,
    )
    if report.passed:
        logger.info(f"Ledger: {report.total}")
    else:
        logger.warning(f"Ledger check failed: {report.degree_identity}; {report.constraint_identity}")
    return report


def map_ledger(f: ProjectiveMap, targets: Sequence[PrimeDivisor], candidates: Sequence[PrimeDivisor],
               canonical: str, exceptional: Sequence[Tuple[str, int, int]],
               constraint: Sequence[str]) -> LedgerReport:
    """Pull back every target prime, compute the exceptional discrepancies on the given charts, run the ledger."""
    registry = {prime.name: prime for prime in candidates}
    pullbacks = {prime.name: pullback_divisor(f, prime, candidates) for prime in targets}
    orders, discrepancies = {}, {}
    for name, source_chart, target_chart in exceptional:
        equation = registry[name].equation
        orders[name] = jacobian_order(f, equation, source_chart, target_chart)
        discrepancies[registry[name]] = discrepancy_coefficient(f, equation, source_chart, target_chart)
    return discrepancy_ledger(pullbacks, discrepancies, canonical=canonical, constraint=constraint,
                              jacobian_orders=orders)


def phi_pullback_table(field: FieldDescriptor = None) -> Dict[str, Divisor]:
    """H_i -> phi^*H_i along A1..A4 and G."""
    primes = standard_primes(field)
    phi = phi_standard(field)
    candidates = [primes[name] for name in ("A1", "A2", "A3", "A4", "G")]
    return {name: pullback_divisor(phi, primes[name], candidates) for name in ("H1", "H2", "H3", "H4")}


def ledger_from_map(field: FieldDescriptor = None) -> LedgerReport:
    """The full ledger for the standard map, Jacobian orders computed from scratch."""
    primes = standard_primes(field)
    return map_ledger(
        phi_standard(field),
        targets=[primes[f"H{i}"] for i in range(1, 5)],
        candidates=[primes[name] for name in ("A1", "A2", "A3", "A4", "G")],
        canonical="K_X",
        exceptional=PHI_EXCEPTIONAL_CHARTS,
        constraint=("A1", "A4"),
    )


def inverse_map(field: FieldDescriptor = None) -> ProjectiveMap:
    """The standard map written from the l-space back to the m-space."""
    field = field or rationals()
    l1, l2, l3, l4 = MultiPoly.gens(TARGET_VARS, field)
    coords = [l1 ** 2 * l4, -(l1 * l2 * l4), l2 ** 2 * l4 - l1 * l3 * l4, l1 ** 3]
    return ProjectiveMap(coords, TARGET_VARS, SOURCE_VARS)


def inverse_ledger(field: FieldDescriptor = None) -> LedgerReport:
    """(phi^-1)^*(K_X + sum A_i) = K_Y + H2 + H4 + P."""
    primes = standard_primes(field)
    return map_ledger(
        inverse_map(field),
        targets=[primes[f"A{i}"] for i in range(1, 5)],
        candidates=[primes[name] for name in ("H1", "H2", "H3", "H4", "P")],
        canonical="K_Y",
        exceptional=INVERSE_EXCEPTIONAL_CHARTS,
        constraint=("H1", "H4"),
    )
