# quotfib/pairs/orbits.py
"""
Orbit Enumeration
=================
Brute-force Aut(E)-orbits of stable form matrices over a small prime field,
compared against the partition by (det M, beta_M).

Matrices are handled as nested tuples of ints mod q: a state is a tuple of
rows, a row a tuple of entries, an entry the coefficient tuple of a binary
form (x^d, x^(d-1) y, ..., y^d). The invariant is computed on the same ints.
"""

from collections import deque
from itertools import product
from typing import Callable, Dict, Iterator, List, Set, Tuple
import logging
import time

from pydantic import BaseModel, Field

from ..core.errors import BudgetExceededError, QuotfibError
from ..core.settings import enumeration_budget
from ..algebra.polynomials import BinaryForm
from ..algebra.scalars import is_prime, prime_field
from ..modules.linalg import rref_mod_p
from .forms import DegreeProfile, FormMatrix

logger = logging.getLogger(__name__)

Form = Tuple[int, ...]
State = Tuple[Tuple[Form, ...], ...]
IntInvariant = Tuple[Form, Tuple[Tuple[int, ...], ...]]


# ================================================================== Integer form arithmetic

def form_mul(a: Form, b: Form, q: int) -> Form:
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return tuple(c % q for c in result)


def form_add(a: Form, b: Form, q: int) -> Form:
    return tuple((x + y) % q for x, y in zip(a, b))


def form_scale(a: Form, c: int, q: int) -> Form:
    return tuple((c * x) % q for x in a)


def normalize_form(a: Form, q: int) -> Form:
    """Scaled so the first nonzero coefficient is 1; the zero form is returned unchanged."""
    lead = next((c for c in a if c), 0)
    if not lead:
        return a
    return form_scale(a, pow(lead, -1, q), q)


def int_determinant(rows: State, q: int) -> Form:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = form_mul(rows[0][j], int_determinant(minor, q), q)
        if j % 2:
            term = form_scale(term, q - 1, q)
        total = term if total is None else form_add(total, term, q)
    return total


def state_of(mat: FormMatrix) -> State:
    """A FormMatrix over GF(q) as nested int tuples."""
    if not mat.field.is_prime_field:
        raise QuotfibError("Orbit states live over prime fields")
    return tuple(tuple(tuple(c.value for c in entry.coefficients()) for entry in row) for row in mat.rows)


def matrix_of(state: State, profile: DegreeProfile, q: int) -> FormMatrix:
    field = prime_field(q)
    return FormMatrix([[BinaryForm.from_coefficients(list(entry), field) for entry in row] for row in state], profile)


def int_invariant(state: State, q: int) -> IntInvariant:
    """(normalized det, RREF of the flattened lower block); det = 0 marks an unstable matrix."""
    block = [[c for entry in row for c in entry] for row in state[1:]]
    echelon, _ = rref_mod_p(block, q, len(block[0]))
    return normalize_form(int_determinant(state, q), q), tuple(echelon)


# ================================================================== Stable matrices

def state_space_size(profile: DegreeProfile, q: int) -> int:
    size = profile.size
    return q ** (size * (profile.top + 1) + (size - 1) * size * (profile.lower + 1))


def _chunks(values: Tuple[int, ...], size: int, width: int) -> Tuple[Form, ...]:
    return tuple(tuple(values[k * width:(k + 1) * width]) for k in range(size))


def stable_states(profile: DegreeProfile, q: int, budget: int = None) -> Dict[State, IntInvariant]:
    """
    Every stable matrix of the profile over GF(q) with its invariant. For a
    fixed beta block, det is linear in the top row through the cofactors.
    """
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    candidates = state_space_size(profile, q)
    cap = enumeration_budget(budget)
    if candidates > cap:
        logger.warning(f"Refusing to enumerate {candidates} matrices of profile {profile} over F_{q}; budget {cap}")
        raise BudgetExceededError(candidates, cap)

    size = profile.size
    top_width, low_width = profile.top + 1, profile.lower + 1
    det_width = profile.det_degree + 1
    results: Dict[State, IntInvariant] = {}
    tops = [_chunks(values, size, top_width) for values in product(range(q), repeat=size * top_width)]

    for low_values in product(range(q), repeat=(size - 1) * size * low_width):
        lower = tuple(_chunks(low_values[i * size * low_width:(i + 1) * size * low_width], size, low_width)
                      for i in range(size - 1))
        block = [[c for entry in row for c in entry] for row in lower]
        echelon, pivots = rref_mod_p(block, q, size * low_width)
        if len(pivots) < size - 1:
            continue
        beta = tuple(echelon)
        cofactors = []
        for j in range(size):
            minor = tuple(row[:j] + row[j + 1:] for row in lower)
            cofactor = int_determinant(minor, q)
            cofactors.append(form_scale(cofactor, q - 1, q) if j % 2 else cofactor)
        for top in tops:
            det = (0,) * det_width
            for entry, cofactor in zip(top, cofactors):
                det = form_add(det, form_mul(entry, cofactor, q), q)
            if any(det):
                results[(top,) + lower] = (normalize_form(det, q), beta)
    logger.debug(f"{len(results)} stable matrices of profile {profile} over F_{q}")
    return results


# ================================================================== Aut(E) generators

def _act(state: State, gamma1: int, gamma2: Tuple[Tuple[int, ...], ...], phi: Tuple[Form, ...], q: int) -> State:
    top, lower = state[0], state[1:]
    size = len(top)
    new_top = []
    for col in range(size):
        value = form_scale(top[col], gamma1, q)
        for j, form in enumerate(phi):
            if any(form):
                value = form_add(value, form_mul(form, lower[j][col], q), q)
        new_top.append(value)
    new_lower = []
    for i in range(len(lower)):
        row = []
        for col in range(size):
            value = (0,) * len(lower[0][col])
            for j in range(len(lower)):
                if gamma2[i][j]:
                    value = form_add(value, form_scale(lower[j][col], gamma2[i][j], q), q)
            row.append(value)
        new_lower.append(tuple(row))
    return (tuple(new_top),) + tuple(new_lower)


def aut_generators(profile: DegreeProfile, q: int) -> List[Callable[[State], State]]:
    """Scalings of gamma_1, elementary and diagonal gamma_2, and single-monomial phi."""
    k = profile.size - 1
    identity = tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))
    zero_phi = tuple((0,) * (profile.phi_degree + 1) for _ in range(k))
    elements = []
    for g in range(2, q):
        elements.append((g, identity, zero_phi))
        for i in range(k):
            diagonal = tuple(tuple((g if i == a else 1) if a == b else 0 for b in range(k)) for a in range(k))
            elements.append((1, diagonal, zero_phi))
    for i in range(k):
        for j in range(k):
            if i != j:
                elementary = tuple(tuple(1 if a == b or (a, b) == (i, j) else 0 for b in range(k)) for a in range(k))
                elements.append((1, elementary, zero_phi))
    for j in range(k):
        for m in range(profile.phi_degree + 1):
            monomial = tuple(1 if index == m else 0 for index in range(profile.phi_degree + 1))
            phi = tuple(monomial if index == j else zero_phi[index] for index in range(k))
            elements.append((1, identity, phi))
    return [lambda state, e=e: _act(state, e[0], e[1], e[2], q) for e in elements]


def orbit_labels(states: Set[State], profile: DegreeProfile, q: int) -> Dict[State, int]:
    """Breadth-first search over the generator graph; Aut(E) is finite so components are orbits."""
    generators = aut_generators(profile, q)
    labels: Dict[State, int] = {}
    orbit = 0
    for seed in sorted(states):
        if seed in labels:
            continue
        labels[seed] = orbit
        queue = deque([seed])
        while queue:
            state = queue.popleft()
            for generator in generators:
                image = generator(state)
                if image not in labels:
                    if image not in states:
                        raise QuotfibError(f"Aut(E) moved a stable matrix out of the stable set: {image}")
                    labels[image] = orbit
                    queue.append(image)
        orbit += 1
    return labels


# ================================================================== Partition comparison

class OrbitComparison(BaseModel):
    """Orbit partition versus invariant partition of the stable matrices."""
    profile: str
    q: int
    stable: int = Field(..., ge=0, description="Number of stable matrices")
    orbits: int = Field(..., ge=0, description="Number of Aut(E)-orbits")
    invariants: int = Field(..., ge=0, description="Number of distinct invariants")
    split_orbits: int = Field(default=0, ge=0, description="Orbits carrying more than one invariant")
    shared_invariants: int = Field(default=0, ge=0, description="Invariants carried by more than one orbit")
    elapsed_ms: float = Field(default=0.0, ge=0)

    @property
    def agree(self) -> bool:
        return self.split_orbits == 0 and self.shared_invariants == 0 and self.orbits == self.invariants

    def to_report(self) -> dict:
        data = self.model_dump()
        data["agree"] = self.agree
        return data


def compare_partitions(profile: DegreeProfile, q: int, budget: int = None) -> OrbitComparison:
    start = time.perf_counter()
    states = stable_states(profile, q, budget)
    labels = orbit_labels(set(states), profile, q)

    by_orbit: Dict[int, Set[IntInvariant]] = {}
    by_invariant: Dict[IntInvariant, Set[int]] = {}
    for state, invariant in states.items():
        label = labels[state]
        by_orbit.setdefault(label, set()).add(invariant)
        by_invariant.setdefault(invariant, set()).add(label)

    comparison = OrbitComparison(
        profile=str(profile),
        q=q,
        stable=len(states),
        orbits=len(by_orbit),
        invariants=len(by_invariant),
        split_orbits=sum(1 for values in by_orbit.values() if len(values) > 1),
        shared_invariants=sum(1 for values in by_invariant.values() if len(values) > 1),
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )
    logger.info(f"Profile {profile} over F_{q}: {comparison.stable} stable, "
                f"{comparison.orbits} orbits, {comparison.invariants} invariants")
    return comparison


def iter_stable_matrices(profile: DegreeProfile, q: int, budget: int = None) -> Iterator[FormMatrix]:
    for state in stable_states(profile, q, budget):
        yield matrix_of(state, profile, q)
