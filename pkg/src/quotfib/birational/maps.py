# quotfib/birational/maps.py
"""
Projective Rational Maps
========================
Rational maps P^3 --> P^3 given by four homogeneous polynomials of a common
degree in the source coordinates, stored with their monomial content removed.

Coordinates are matched by position: composing f after g binds the i-th
source variable of f to the i-th coordinate of g. Target variable names only
label the target space (they define the hyperplanes H_i of pulled-back
divisors).
"""

from typing import List, Optional, Sequence, Tuple
import logging

from ..core.errors import ChartError, DegenerateChartError, IndivisibleError, QuotfibError, ShapeMismatchError
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import FieldDescriptor, Scalar, ScalarLike, rationals

logger = logging.getLogger(__name__)

SOURCE_VARS = ("m1", "m2", "m3", "m4")
TARGET_VARS = ("l1", "l2", "l3", "l4")


class ProjectiveMap:
    """Immutable rational map given by homogeneous coordinates of equal degree."""

    __slots__ = ("_source_vars", "_target_vars", "_coords", "_cleared")

    def __init__(self, coords: Sequence[MultiPoly], source_vars: Sequence[str] = None,
                 target_vars: Sequence[str] = None, cleared: MultiPoly = None):
        coords = list(coords)
        if not coords:
            raise ShapeMismatchError("A projective map needs coordinates")
        source_vars = tuple(source_vars or coords[0].vars)
        coords = [c.with_vars(source_vars) for c in coords]
        field = coords[0].field
        if any(c.field != field for c in coords):
            raise ShapeMismatchError("Coordinates must share a base field")
        if all(c.is_zero() for c in coords):
            raise QuotfibError("The zero tuple does not define a rational map")
        degrees = {c.total_degree() for c in coords if not c.is_zero()}
        if len(degrees) != 1 or not all(c.is_homogeneous() for c in coords):
            raise ShapeMismatchError("Coordinates must be homogeneous of one common degree")

        content = tuple(min(column) for column in zip(*(c.monomial_content() for c in coords if not c.is_zero())))
        coords = [c.divide_by_monomial(content) for c in coords]
        content_poly = MultiPoly(source_vars, field, {content: 1})
        cleared = content_poly if cleared is None else cleared.with_vars(source_vars) * content_poly

        self._source_vars = source_vars
        self._target_vars = tuple(target_vars or TARGET_VARS[:len(coords)])
        if len(self._target_vars) != len(coords):
            raise ShapeMismatchError(f"{len(coords)} coordinates but {len(self._target_vars)} target variables")
        self._coords = tuple(coords)
        self._cleared = cleared

    # ------------------------------------------------------------------ accessors

    @property
    def coords(self) -> Tuple[MultiPoly, ...]:
        return self._coords

    @property
    def source_vars(self) -> Tuple[str, ...]:
        return self._source_vars

    @property
    def target_vars(self) -> Tuple[str, ...]:
        return self._target_vars

    @property
    def field(self) -> FieldDescriptor:
        return self._coords[0].field

    @property
    def degree(self) -> int:
        return max(c.total_degree() for c in self._coords)

    @property
    def cleared(self) -> MultiPoly:
        """Common factor removed from the coordinates at construction (1 if none)."""
        return self._cleared

    def coordinate(self, index: int) -> MultiPoly:
        return self._coords[index]

    def is_identity(self) -> bool:
        """Whether the map is (x_1 : ... : x_k) up to a common scalar."""
        if len(self._coords) != len(self._source_vars):
            return False
        gens = MultiPoly.gens(self._source_vars, self.field)
        scales = set()
        for coord, gen in zip(self._coords, gens):
            if len(coord) != 1:
                return False
            coeff = coord.leading_coefficient()
            if coord != gen.scale(coeff):
                return False
            scales.add(coeff)
        return len(scales) == 1

    # ------------------------------------------------------------------ evaluation

    def evaluate(self, point: Sequence[ScalarLike]) -> Tuple[Scalar, ...]:
        """Image of a point, normalized so its first nonzero coordinate is 1."""
        image = [c.evaluate(point) for c in self._coords]
        return normalize_point(image)

    def pullback_polynomial(self, poly: MultiPoly) -> MultiPoly:
        """poly(target coords) composed with the map: a polynomial in the source variables."""
        if len(poly.vars) != len(self._coords):
            raise ShapeMismatchError(f"Polynomial in {len(poly.vars)} variables, map has {len(self._coords)} coordinates")
        bindings = {name: coord for name, coord in zip(poly.vars, self._coords)}
        return poly.substitute(bindings).with_vars(self._source_vars)

    # ------------------------------------------------------------------ charts

    def dehomogenized(self, source_chart: int, target_chart: int) -> Tuple[Tuple[str, ...], List[MultiPoly], MultiPoly]:
        """
        The map on the affine charts x_s = 1 and y_t = 1: (affine source
        variables, numerators F_i for i != t, common denominator F_t), all in
        the affine variables.
        """
        k = len(self._source_vars)
        if not (0 <= source_chart < k and 0 <= target_chart < len(self._coords)):
            raise ChartError(f"Chart indices out of range: source {source_chart}, target {target_chart}")
        affine = tuple(name for i, name in enumerate(self._source_vars) if i != source_chart)
        one = MultiPoly.constant(1, affine, self.field)
        binding = {self._source_vars[source_chart]: one}
        dehom = [c.substitute(binding).with_vars(affine) for c in self._coords]
        denominator = dehom[target_chart]
        if denominator.is_zero():
            raise ChartError(f"Coordinate {target_chart + 1} vanishes identically: the image misses that chart")
        numerators = [p for i, p in enumerate(dehom) if i != target_chart]
        return affine, numerators, denominator

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectiveMap):
            return NotImplemented
        return self._coords == other._coords and self._source_vars == other._source_vars

    def __hash__(self) -> int:
        return hash(self._coords)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self._coords) + ")"

    def __repr__(self) -> str:
        return f"ProjectiveMap{self}"


def normalize_point(coords: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    """Scale a projective point so the first nonzero coordinate is 1."""
    lead = next((c for c in coords if not c.is_zero()), None)
    if lead is None:
        raise QuotfibError("The map is undefined at this point (all coordinates vanish)")
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


# ================================================================== Standard maps

def phi_standard(field: FieldDescriptor = None) -> ProjectiveMap:
    """(m1^2 m4 : -m1 m2 m4 : m2^2 m4 - m1 m3 m4 : m1^3)."""
    field = field or rationals()
    m1, m2, m3, m4 = MultiPoly.gens(SOURCE_VARS, field)
    coords = [m1 ** 2 * m4, -(m1 * m2 * m4), m2 ** 2 * m4 - m1 * m3 * m4, m1 ** 3]
    return ProjectiveMap(coords, SOURCE_VARS, TARGET_VARS)


def identity_map(source_vars: Sequence[str] = SOURCE_VARS, target_vars: Sequence[str] = TARGET_VARS,
                 field: FieldDescriptor = None) -> ProjectiveMap:
    return ProjectiveMap(MultiPoly.gens(source_vars, field or rationals()), source_vars, target_vars)


def known_primes(vars: Sequence[str] = SOURCE_VARS, field: FieldDescriptor = None) -> List[MultiPoly]:
    """The primes cleared by default after composition: x1, x4 and x2^2 - x1 x3."""
    x1, x2, x3, x4 = MultiPoly.gens(vars, field or rationals())
    return [x1, x4, x2 ** 2 - x1 * x3]


def compose(f: ProjectiveMap, g: ProjectiveMap, primes: Optional[Sequence[MultiPoly]] = None) -> ProjectiveMap:
    """
    f after g: substitute g's coordinates for f's source variables, remove the
    monomial content, then divide out every listed prime that divides all
    coordinates. The removed factor is kept in `cleared`.
    """
    if len(f.source_vars) != len(g.coords):
        raise ShapeMismatchError(f"Cannot compose: f takes {len(f.source_vars)} coordinates, g gives {len(g.coords)}")
    if f.field != g.field:
        raise ShapeMismatchError("Cannot compose maps over different fields")
    bindings = {name: coord for name, coord in zip(f.source_vars, g.coords)}
    coords = [c.substitute(bindings).with_vars(g.source_vars) for c in f.coords]
    if all(c.is_zero() for c in coords):
        raise QuotfibError(f"{f} after {g} is the zero map")

    if primes is None:
        primes = known_primes(g.source_vars, g.field) if len(g.source_vars) == 4 else []
    composite = ProjectiveMap(coords, g.source_vars, f.target_vars)
    cleared = composite.cleared
    coords = list(composite.coords)
    for prime in primes:
        prime = prime.with_vars(g.source_vars)
        while True:
            try:
                divided = [c.exact_divide(prime) for c in coords]
            except IndivisibleError:
                break
            coords = divided
            cleared = cleared * prime
    result = ProjectiveMap(coords, g.source_vars, f.target_vars, cleared=cleared)
    logger.debug(f"compose: {result} after clearing {result.cleared}")
    return result


# ================================================================== Jacobians

def _det3(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _det(m: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion along the first row."""
    size = len(m)
    if size == 1:
        return m[0][0]
    if size == 3:
        return _det3(m)
    total = None
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def jacobian(f: ProjectiveMap, source_chart: int, target_chart: int) -> Tuple[MultiPoly, MultiPoly, Tuple[str, ...]]:
    """
    Jacobian determinant of the dehomogenized map as numerator / denominator
    in the affine source variables: entries d(F_i/F_t)/dx_j have numerators
    F_t dF_i - F_i dF_t over F_t^2.
    """
    affine, numerators, denominator = f.dehomogenized(source_chart, target_chart)
    rows = []
    for numerator in numerators:
        rows.append([
            denominator * numerator.partial_derivative(x) - numerator * denominator.partial_derivative(x)
            for x in affine
        ])
    det = _det(rows)
    if det.is_zero():
        raise DegenerateChartError(
            f"Jacobian vanishes identically on charts x{source_chart + 1}=1, y{target_chart + 1}=1"
        )
    return det, denominator ** (2 * len(numerators)), affine


def _affine_prime(prime: MultiPoly, f: ProjectiveMap, source_chart: int, affine: Tuple[str, ...]) -> MultiPoly:
    one = MultiPoly.constant(1, affine, f.field)
    local = prime.with_vars(f.source_vars).substitute({f.source_vars[source_chart]: one}).with_vars(affine)
    if local.is_constant():
        raise ChartError(f"{prime} does not meet the chart {f.source_vars[source_chart]} = 1")
    return local


def jacobian_order(f: ProjectiveMap, prime: MultiPoly, source_chart: int, target_chart: int) -> int:
    """Order of vanishing of the chart Jacobian along the source prime (negative for poles)."""
    numerator, denominator, affine = jacobian(f, source_chart, target_chart)
    local = _affine_prime(prime, f, source_chart, affine)
    order = numerator.multiplicity_along(local) - denominator.multiplicity_along(local)
    logger.debug(f"ord_{prime}(Jac) on charts ({source_chart}, {target_chart}) = {order}")
    return order


def discrepancy_coefficient(f: ProjectiveMap, prime: MultiPoly, source_chart: int, target_chart: int) -> int:
    """
    Coefficient of the prime in f^*K_Y - K_X, with K_Y and K_X the divisors of
    the standard 3-forms of the chosen charts: -4 mult(f^*H_t) - ord(Jac).
    """
    order = jacobian_order(f, prime, source_chart, target_chart)
    pulled = f.coordinate(target_chart)
    return -4 * pulled.multiplicity_along(prime.with_vars(f.source_vars)) - order


def valid_charts(f: ProjectiveMap, prime: MultiPoly) -> List[Tuple[int, int]]:
    """Chart pairs on which the prime meets the source chart and the Jacobian is not identically zero."""
    pairs = []
    for s in range(len(f.source_vars)):
        source_var = MultiPoly.variable(f.source_vars[s], f.source_vars, f.field)
        if prime.with_vars(f.source_vars) == source_var or prime.with_vars(f.source_vars).is_constant():
            continue
        for t in range(len(f.coords)):
            if f.coordinate(t).is_zero():
                continue
            try:
                jacobian(f, s, t)
            except (DegenerateChartError, ChartError):
                continue
            pairs.append((s, t))
    return pairs
