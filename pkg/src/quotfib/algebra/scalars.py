# quotfib/algebra/scalars.py
"""
Scalars
=======
Exact field elements over the rationals or a prime field GF(p), p < 2**16.

Rationals are stored as fractions.Fraction (lowest terms, positive
denominator); prime-field elements as canonical representatives in [0, p).
Arithmetic between elements of different fields raises FieldMismatchError;
plain ints and Fractions are coerced into the field of the Scalar they meet.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union
import logging

from pydantic import BaseModel, Field, model_validator

from ..core.errors import FieldMismatchError, NotAUnitError, QuotfibError
from ..core.settings import MAX_PRIME

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    """Deterministic trial division; fields here are tiny."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ================================================================== Field descriptors

class FieldKind(str, Enum):
    """Kind of base field."""
    RATIONALS = "QQ"
    PRIME = "GF"


class FieldDescriptor(BaseModel):
    """Descriptor of a base field: the rationals, or GF(p) with p prime."""
    kind: FieldKind = Field(..., description="Rationals or prime field")
    characteristic: int = Field(default=0, ge=0, description="0 for QQ, p for GF(p)")

    model_config = {
        "frozen": True,
    }

    @model_validator(mode='after')
    def validate_characteristic(self):
        """Rationals have characteristic 0; prime fields a prime below 2**16."""
        if self.kind == FieldKind.RATIONALS and self.characteristic != 0:
            raise ValueError("The rationals have characteristic 0")
        if self.kind == FieldKind.PRIME:
            if not is_prime(self.characteristic):
                raise ValueError(f"{self.characteristic} is not prime")
            if self.characteristic >= MAX_PRIME:
                raise ValueError(f"Prime fields are limited to p < {MAX_PRIME}")
        return self

    @property
    def is_prime_field(self) -> bool:
        return self.kind == FieldKind.PRIME

    @property
    def order(self) -> int:
        """Number of elements (prime fields only)."""
        if not self.is_prime_field:
            raise QuotfibError("The rationals are infinite")
        return self.characteristic

    def zero(self) -> "Scalar":
        return Scalar(0, self)

    def one(self) -> "Scalar":
        return Scalar(1, self)

    def __call__(self, value) -> "Scalar":
        """Coerce an int, Fraction or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"Cannot coerce {value} from {value.field} into {self}")
            return value
        return Scalar(value, self)

    def elements(self) -> Iterator["Scalar"]:
        """All elements of a prime field, in the order 0, 1, ..., p-1."""
        for value in range(self.order):
            yield Scalar(value, self)

    def __str__(self) -> str:
        if self.is_prime_field:
            return f"GF({self.characteristic})"
        return "QQ"


@lru_cache(maxsize=None)
def rationals() -> FieldDescriptor:
    """The (cached) descriptor of QQ."""
    return FieldDescriptor(kind=FieldKind.RATIONALS)


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldDescriptor:
    """The (cached) descriptor of GF(p)."""
    return FieldDescriptor(kind=FieldKind.PRIME, characteristic=p)


def parse_field(text: str) -> FieldDescriptor:
    """Parse "QQ", "Q", "0", "5" or "GF(5)" into a descriptor."""
    clean = text.strip().upper()
    if clean in ("QQ", "Q", "0", ""):
        return rationals()
    if clean.startswith("GF(") and clean.endswith(")"):
        clean = clean[3:-1]
    try:
        p = int(clean)
    except ValueError:
        raise QuotfibError(f"Unknown field '{text}'; use QQ or a prime")
    return prime_field(p)


# ================================================================== Scalars

ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """Immutable exact element of a FieldDescriptor's field."""

    __slots__ = ("_value", "_field")

    def __init__(self, value: ScalarLike, field: FieldDescriptor):
        if isinstance(value, float):
            raise QuotfibError(f"Refusing inexact value {value!r}; use an int or a Fraction")
        if isinstance(value, Scalar):
            if value._field != field:
                raise FieldMismatchError(f"Cannot coerce {value} from {value._field} into {field}")
            value = value._value
        if field.is_prime_field:
            p = field.characteristic
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise NotAUnitError(f"{value} is not defined in {field}")
                value = value.numerator * pow(value.denominator, -1, p)
            self._value = int(value) % p
        else:
            self._value = Fraction(value)
        self._field = field

    @classmethod
    def _raw(cls, value, field: FieldDescriptor) -> "Scalar":
        """Construct from an already-canonical value."""
        scalar = object.__new__(cls)
        scalar._value = value
        scalar._field = field
        return scalar

    # ------------------------------------------------------------------ accessors

    @property
    def value(self) -> Union[int, Fraction]:
        """Canonical value: a Fraction over QQ, an int in [0, p) over GF(p)."""
        return self._value

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    def is_zero(self) -> bool:
        return self._value == 0

    def is_one(self) -> bool:
        return self._value == 1

    # ------------------------------------------------------------------ arithmetic

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other._field is not self._field and other._field != self._field:
                raise FieldMismatchError(f"Cannot combine {self._field} and {other._field} elements")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, self._field)
        return NotImplemented

    def _make(self, value) -> "Scalar":
        if self._field.is_prime_field:
            return Scalar._raw(value % self._field.characteristic, self._field)
        return Scalar._raw(value, self._field)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self._value - other._value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(other._value - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._make(self._value * other._value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self._value)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; NotAUnitError for zero."""
        if self._value == 0:
            raise NotAUnitError(f"0 has no inverse in {self._field}")
        if self._field.is_prime_field:
            return Scalar._raw(pow(self._value, -1, self._field.characteristic), self._field)
        return Scalar._raw(1 / self._value, self._field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self._field.is_prime_field:
            return Scalar._raw(pow(self._value, exponent, self._field.characteristic), self._field)
        return Scalar._raw(self._value ** exponent, self._field)

    # ------------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._field == other._field and self._value == other._value
        if isinstance(other, (int, Fraction)):
            try:
                return self._value == Scalar(other, self._field)._value
            except NotAUnitError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        # canonical values hash like the ints and Fractions they compare equal to
        return hash(self._value)

    def __bool__(self) -> bool:
        return self._value != 0

    def __str__(self) -> str:
        return str(self._value)

    def __repr__(self) -> str:
        return f"Scalar({self._value}, {self._field})"
