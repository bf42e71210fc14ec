# quotfib/birational/divisors.py
"""
Formal Divisors
===============
Named prime divisors of P^3 and formal integer combinations of them.

Canonical classes K_X and K_Y are symbols of degree -4 with no equation;
every other prime carries its defining homogeneous polynomial. Pullbacks
under a ProjectiveMap are decomposed along a list of candidate primes by
repeated exact division.
"""

from random import Random
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
import logging
import re

from pydantic import BaseModel, Field, model_validator

from ..core.errors import LedgerError, QuotfibError
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import FieldDescriptor, is_prime, prime_field, rationals
from .maps import SOURCE_VARS, TARGET_VARS, ProjectiveMap

logger = logging.getLogger(__name__)

CANONICAL_DEGREE = -4


class PrimeDivisor(BaseModel):
    """A named prime divisor; canonical symbols have no equation."""
    name: str = Field(..., min_length=1, description="Display name, e.g. A1 or K_X")
    degree: int = Field(..., description="Degree of the divisor class")
    equation: Optional[MultiPoly] = Field(default=None, description="Defining homogeneous polynomial")

    model_config = {
        "frozen": True,
        "arbitrary_types_allowed": True,
    }

    @model_validator(mode='after')
    def validate_equation(self):
        """An equation must be homogeneous of the stated degree."""
        if self.equation is not None:
            if self.equation.is_constant() or not self.equation.is_homogeneous():
                raise ValueError(f"{self.name}: equation must be a nonconstant homogeneous polynomial")
            if self.equation.total_degree() != self.degree:
                raise ValueError(f"{self.name}: equation has degree {self.equation.total_degree()}, "
                                 f"declared {self.degree}")
        return self

    @property
    def is_canonical(self) -> bool:
        return self.equation is None

    def __str__(self) -> str:
        return self.name


def _sort_key(name: str) -> Tuple[int, str]:
    return (0 if name.startswith("K_") else 1, name)


class Divisor:
    """Immutable formal integer combination of prime divisors; zero coefficients are dropped."""

    __slots__ = ("_primes", "_coeffs")

    def __init__(self, terms: Iterable[Tuple[PrimeDivisor, int]] = ()):
        primes: Dict[str, PrimeDivisor] = {}
        coeffs: Dict[str, int] = {}
        for prime, coeff in terms:
            known = primes.get(prime.name)
            if known is not None and known.degree != prime.degree:
                raise LedgerError(f"Two different divisors are named {prime.name}")
            primes[prime.name] = prime
            coeffs[prime.name] = coeffs.get(prime.name, 0) + int(coeff)
        self._coeffs = {name: c for name, c in coeffs.items() if c}
        self._primes = {name: primes[name] for name in self._coeffs}

    @classmethod
    def zero(cls) -> "Divisor":
        return cls()

    @classmethod
    def of(cls, prime: PrimeDivisor, coeff: int = 1) -> "Divisor":
        return cls([(prime, coeff)])

    def coefficient(self, prime) -> int:
        name = prime.name if isinstance(prime, PrimeDivisor) else prime
        return self._coeffs.get(name, 0)

    def prime(self, name: str) -> PrimeDivisor:
        return self._primes[name]

    def names(self) -> List[str]:
        return sorted(self._coeffs, key=_sort_key)

    def items(self) -> Iterator[Tuple[PrimeDivisor, int]]:
        for name in self.names():
            yield self._primes[name], self._coeffs[name]

    def degree(self) -> int:
        return sum(prime.degree * coeff for prime, coeff in self.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        return Divisor(list(self.items()) + list(other.items()))

    def __neg__(self) -> "Divisor":
        return Divisor((prime, -coeff) for prime, coeff in self.items())

    def __sub__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        if not isinstance(k, int):
            return NotImplemented
        return Divisor((prime, k * coeff) for prime, coeff in self.items())

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def to_report(self) -> Dict[str, int]:
        return {name: self._coeffs[name] for name in self.names()}

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for prime, coeff in self.items():
            size = abs(coeff)
            text = prime.name if size == 1 else f"{size}{prime.name}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Divisor({self})"


_TERM_PATTERN = re.compile(r"^(\d*)([A-Za-z][A-Za-z0-9_]*)$")


def parse_divisor(text: str, primes: Mapping[str, PrimeDivisor]) -> Divisor:
    """Read "2A1 + A4" or "K_X - A1" back into a Divisor over the named primes; "0" is the zero divisor."""
    text = text.strip()
    if text == "0":
        return Divisor.zero()
    terms = []
    sign = 1
    for token in text.replace("+", " + ").replace("-", " - ").split():
        if token in "+-":
            sign = -1 if token == "-" else 1
            continue
        match = _TERM_PATTERN.match(token)
        if not match:
            raise LedgerError(f"Cannot read divisor term '{token}' in '{text}'")
        count, name = match.groups()
        if name not in primes:
            raise LedgerError(f"Unknown prime divisor '{name}' in '{text}'")
        terms.append((primes[name], sign * int(count or 1)))
        sign = 1
    return Divisor(terms)


# ================================================================== Standard primes

def canonical_class(name: str) -> PrimeDivisor:
    return PrimeDivisor(name=name, degree=CANONICAL_DEGREE)


def hyperplanes(vars: Sequence[str], prefix: str, field: FieldDescriptor = None) -> List[PrimeDivisor]:
    """{prefix}i : x_i = 0 for each declared variable."""
    field = field or rationals()
    return [PrimeDivisor(name=f"{prefix}{i + 1}", degree=1, equation=x)
            for i, x in enumerate(MultiPoly.gens(vars, field))]


def conic_divisor(name: str, vars: Sequence[str], field: FieldDescriptor = None) -> PrimeDivisor:
    """The quadric x2^2 - x1*x3 = 0."""
    x1, x2, x3, _ = MultiPoly.gens(vars, field or rationals())
    return PrimeDivisor(name=name, degree=2, equation=x2 ** 2 - x1 * x3)


def standard_primes(field: FieldDescriptor = None) -> Dict[str, PrimeDivisor]:
    """A1..A4 (m_i = 0), H1..H4 (l_i = 0), G, P and the canonical symbols K_X, K_Y."""
    primes = {d.name: d for d in hyperplanes(SOURCE_VARS, "A", field)}
    primes.update({d.name: d for d in hyperplanes(TARGET_VARS, "H", field)})
    primes["G"] = conic_divisor("G", SOURCE_VARS, field)
    primes["P"] = conic_divisor("P", TARGET_VARS, field)
    primes["K_X"] = canonical_class("K_X")
    primes["K_Y"] = canonical_class("K_Y")
    return primes


# ================================================================== Pullbacks

def pullback_divisor(f: ProjectiveMap, prime: PrimeDivisor, candidates: Sequence[PrimeDivisor]) -> Divisor:
    """
    Divisor of prime(f) decomposed along the candidate source primes. The
    cofactor left after dividing out every candidate must be a nonzero
    constant and the degrees must add up to deg prime(f).
    """
    if prime.equation is None:
        raise LedgerError(f"{prime.name} is a formal symbol and has no pullback equation")
    pulled = f.pullback_polynomial(prime.equation.with_vars(f.target_vars))
    if pulled.is_zero():
        raise LedgerError(f"{prime.name} contains the image of the map")

    residual = pulled
    terms = []
    for candidate in candidates:
        if candidate.equation is None:
            continue
        equation = candidate.equation.with_vars(f.source_vars)
        mult = residual.multiplicity_along(equation)
        if mult:
            residual = residual.exact_divide(equation ** mult)
            terms.append((candidate, mult))

    if not residual.is_constant():
        raise LedgerError(f"Pullback of {prime.name} leaves the cofactor {residual}; the candidate list is incomplete")
    divisor = Divisor(terms)
    if divisor.degree() != pulled.total_degree():
        raise LedgerError(f"Pullback of {prime.name}: degrees add up to {divisor.degree()}, "
                          f"expected {pulled.total_degree()}")
    logger.debug(f"pullback of {prime.name}: {divisor}")
    return divisor


def line_vanishing_order(poly: MultiPoly, point: Sequence[int], direction: Sequence[int], q: int) -> Optional[int]:
    """
    Order at s = 0 of poly(point + s*direction) over F_q; None when the
    polynomial vanishes on the whole line.
    """
    field = prime_field(q)
    line = ("s",)
    s = MultiPoly.variable("s", line, field)
    bindings = {
        name: MultiPoly.constant(p % q, line, field) + s.scale(d % q)
        for name, p, d in zip(poly.vars, point, direction)
    }
    restricted = poly.change_field(field).substitute(bindings)
    if restricted.is_zero():
        return None
    return min(exponents[0] for exponents in restricted.terms)


def _random_point_on(equation: MultiPoly, q: int, rng: Random, attempts: int = 10_000) -> Tuple[int, ...]:
    check = equation.evaluator()
    nvars = len(equation.vars)
    for _ in range(attempts):
        point = tuple(rng.randrange(q) for _ in range(nvars))
        if any(point) and check(point) == 0:
            return point
    raise QuotfibError(f"No F_{q} point found on {equation} after {attempts} tries")


def spot_check_pullback(f: ProjectiveMap, prime: PrimeDivisor, divisor: Divisor, q: int,
                        samples: int = 100, rng: Optional[Random] = None) -> bool:
    """
    For random F_q points on each component of the claimed pullback, prime(f)
    restricted to a random line through the point vanishes to at least the
    claimed multiplicity.
    """
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    rng = rng or Random(0)
    field = prime_field(q)
    pulled = f.pullback_polynomial(prime.equation.with_vars(f.target_vars)).change_field(field)
    nvars = len(f.source_vars)
    for component, mult in divisor.items():
        equation = component.equation.with_vars(f.source_vars).change_field(field)
        for _ in range(samples):
            point = _random_point_on(equation, q, rng)
            direction = tuple(rng.randrange(q) for _ in range(nvars))
            order = line_vanishing_order(pulled, point, direction, q)
            if order is not None and order < mult:
                logger.warning(f"{prime.name} pulled back vanishes to order {order} < {mult} "
                               f"along {component.name} at {point}")
                return False
    return True
