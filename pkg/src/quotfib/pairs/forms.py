# quotfib/pairs/forms.py
"""
Form Matrices
=============
Square matrices of binary forms describing maps O^r -> E on P^1 with

    E = O(d1)^(r-1) + O(d0),   d0 >= d1 >= 0.

Row 0 holds the forms alpha_1..alpha_r of degree d0, rows 1..r-1 hold the
beta block of degree d1. Two profiles are used:

    edge   (n; 0, ..., 0)   E = O^(r-1) + O(n)
    deg3   (2; 1)           E = O(1) + O(2)

Aut(E) = (k* x GL(r-1)) x| Hom(O(d1)^(r-1), O(d0)) acts on the left:
row 0 -> gamma_1 * row 0 + sum_j phi_j * row j, lower block -> gamma_2 * block.
"""

from enum import Enum
from random import Random
from typing import List, Optional, Sequence, Tuple
import logging

from pydantic import BaseModel, Field, model_validator

from ..core.errors import ShapeMismatchError
from ..algebra.parser import split_top_level
from ..algebra.polynomials import FORM_VARS, BinaryForm, MultiPoly
from ..algebra.scalars import FieldDescriptor, Scalar, ScalarLike, rationals

logger = logging.getLogger(__name__)


class PairShape(str, Enum):
    """Which splitting type of E a matrix describes."""
    EDGE = "edge"
    DEG3 = "deg3"


class DegreeProfile(BaseModel):
    """Per-row form degrees (d0; d1, ..., d1)."""
    degrees: Tuple[int, ...] = Field(..., description="Degree of the forms in each row")

    model_config = {
        "frozen": True,
    }

    @model_validator(mode='after')
    def validate_degrees(self):
        """At least two rows, a common lower degree, d0 >= d1 >= 0."""
        if len(self.degrees) < 2:
            raise ValueError("A form matrix needs at least two rows")
        lower = set(self.degrees[1:])
        if len(lower) != 1:
            raise ValueError(f"Rows below the first must share one degree, got {self.degrees[1:]}")
        if min(self.degrees) < 0 or self.degrees[0] < self.degrees[1]:
            raise ValueError(f"Need d0 >= d1 >= 0, got {self.degrees}")
        return self

    @classmethod
    def edge(cls, r: int, n: int) -> "DegreeProfile":
        return cls(degrees=(n,) + (0,) * (r - 1))

    @classmethod
    def deg3(cls) -> "DegreeProfile":
        return cls(degrees=(2, 1))

    @property
    def size(self) -> int:
        return len(self.degrees)

    @property
    def top(self) -> int:
        return self.degrees[0]

    @property
    def lower(self) -> int:
        return self.degrees[1]

    @property
    def phi_degree(self) -> int:
        """Degree of the forms phi_j in Hom(O(d1), O(d0))."""
        return self.top - self.lower

    @property
    def det_degree(self) -> int:
        return sum(self.degrees)

    @property
    def shape(self) -> Optional[PairShape]:
        if self.lower == 0:
            return PairShape.EDGE
        if self.degrees == (2, 1):
            return PairShape.DEG3
        return None

    def __str__(self) -> str:
        return f"({self.top}; {', '.join(str(d) for d in self.degrees[1:])})"


# ================================================================== Form matrices

class FormMatrix:
    """Immutable square matrix of binary forms matching a degree profile."""

    __slots__ = ("_rows", "_profile", "_field")

    def __init__(self, rows: Sequence[Sequence[BinaryForm]], profile: DegreeProfile = None):
        rows = tuple(tuple(row) for row in rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ShapeMismatchError("Form matrices are square")
        if profile is None:
            profile = DegreeProfile(degrees=tuple(row[0].degree for row in rows))
        if profile.size != len(rows):
            raise ShapeMismatchError(f"Profile {profile} has {profile.size} rows, matrix has {len(rows)}")
        field = rows[0][0].field
        for i, row in enumerate(rows):
            for entry in row:
                if entry.field != field:
                    raise ShapeMismatchError("Entries must share one base field")
                if entry.degree != profile.degrees[i]:
                    raise ShapeMismatchError(
                        f"Row {i} entry {entry} has degree {entry.degree}, profile {profile} wants {profile.degrees[i]}"
                    )
        self._rows = rows
        self._profile = profile
        self._field = field

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], profile: DegreeProfile,
              field: FieldDescriptor = None) -> "FormMatrix":
        """Entries given as expressions in x, y."""
        field = field or rationals()
        return cls(
            [[BinaryForm.parse(text, profile.degrees[i], field) for text in row] for i, row in enumerate(rows)],
            profile,
        )

    @classmethod
    def from_text(cls, text: str, profile: DegreeProfile, field: FieldDescriptor = None) -> "FormMatrix":
        """One row per non-empty line, entries separated by commas; '#' starts a comment."""
        lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
        rows = [split_top_level(line) for line in lines if line]
        return cls.parse(rows, profile, field)

    @property
    def rows(self) -> Tuple[Tuple[BinaryForm, ...], ...]:
        return self._rows

    @property
    def profile(self) -> DegreeProfile:
        return self._profile

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    @property
    def size(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> BinaryForm:
        return self._rows[i][j]

    def lower_block(self) -> List[List[Scalar]]:
        """Rows 1.. flattened into coefficient vectors (entry by entry)."""
        return [[c for entry in row for c in entry.coefficients()] for row in self._rows[1:]]

    def determinant(self) -> BinaryForm:
        return form_determinant(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return self._profile == other._profile and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(entry) for entry in row) for row in self._rows) + "]"

    def __repr__(self) -> str:
        return f"FormMatrix{self}"


def form_determinant(rows: Sequence[Sequence[BinaryForm]]) -> BinaryForm:
    """Cofactor expansion along the first row; homogeneous because degrees are per row."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = None
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * form_determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


# ================================================================== Aut(E) action

class AutElement(BaseModel):
    """[[gamma_1, phi], [0, gamma_2]] acting on the left of a form matrix."""
    gamma1: Scalar
    gamma2: Tuple[Tuple[Scalar, ...], ...] = Field(..., description="Invertible (r-1)x(r-1) scalar matrix")
    phi: Tuple[BinaryForm, ...] = Field(..., description="r-1 forms of degree d0 - d1")

    model_config = {
        "frozen": True,
        "arbitrary_types_allowed": True,
    }


def act(element: AutElement, mat: FormMatrix) -> FormMatrix:
    """element * mat."""
    rows = mat.rows
    lower_count = mat.size - 1
    if len(element.phi) != lower_count or len(element.gamma2) != lower_count:
        raise ShapeMismatchError(f"Automorphism does not fit a {mat.size}x{mat.size} matrix")
    top = []
    for col in range(mat.size):
        value = rows[0][col] * element.gamma1
        for j, phi in enumerate(element.phi):
            value = value + phi * rows[j + 1][col]
        top.append(value)
    lower = []
    for i in range(lower_count):
        new_row = []
        for col in range(mat.size):
            value = BinaryForm.zero(mat.profile.lower, mat.field)
            for j in range(lower_count):
                value = value + rows[j + 1][col] * element.gamma2[i][j]
            new_row.append(value)
        lower.append(new_row)
    return FormMatrix([top] + lower, mat.profile)


def _random_invertible(size: int, field: FieldDescriptor, rng: Random) -> Tuple[Tuple[Scalar, ...], ...]:
    from ..modules.linalg import rank

    bound = field.order if field.is_prime_field else 5
    while True:
        matrix = [[field(rng.randrange(bound)) for _ in range(size)] for _ in range(size)]
        if rank(matrix, field, size) == size:
            return tuple(tuple(row) for row in matrix)


def random_form(degree: int, field: FieldDescriptor, rng: Random, bound: int = 5) -> BinaryForm:
    top = field.order if field.is_prime_field else bound
    return BinaryForm.from_coefficients([rng.randrange(top) for _ in range(degree + 1)], field)


def random_aut_element(profile: DegreeProfile, field: FieldDescriptor, rng: Random) -> AutElement:
    bound = field.order if field.is_prime_field else 5
    gamma1 = field(rng.randrange(1, bound))
    return AutElement(
        gamma1=gamma1,
        gamma2=_random_invertible(profile.size - 1, field, rng),
        phi=tuple(random_form(profile.phi_degree, field, rng) for _ in range(profile.size - 1)),
    )


def random_form_matrix(profile: DegreeProfile, field: FieldDescriptor, rng: Random) -> FormMatrix:
    return FormMatrix(
        [[random_form(degree, field, rng) for _ in range(profile.size)] for degree in profile.degrees],
        profile,
    )


def form_from_poly(poly: MultiPoly, degree: int) -> BinaryForm:
    """Wrap a polynomial in x, y with an explicit degree tag."""
    return BinaryForm(poly.with_vars(FORM_VARS), degree)


def scalar_form(value: ScalarLike, field: FieldDescriptor) -> BinaryForm:
    return BinaryForm.from_coefficients([value], field)
