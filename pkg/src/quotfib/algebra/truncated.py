# quotfib/algebra/truncated.py
"""
Truncated Polynomials
=====================
Elements of k[t]/<t^n> as dense coefficient vectors of length n.
"""

from typing import Iterable, Sequence
import logging

from ..core.errors import FieldMismatchError, NotAUnitError, ShapeMismatchError
from .scalars import FieldDescriptor, Scalar, ScalarLike

logger = logging.getLogger(__name__)


class TruncatedPoly:
    """Immutable element of k[t]/<t^n>; coefficient i is the coefficient of t^i."""

    __slots__ = ("_coeffs", "_field")

    def __init__(self, coeffs: Sequence[ScalarLike], field: FieldDescriptor):
        if len(coeffs) < 1:
            raise ShapeMismatchError("A truncated polynomial needs modulus n >= 1")
        self._field = field
        self._coeffs = tuple(Scalar(c, field) for c in coeffs)

    # ------------------------------------------------------------------ constructors

    @classmethod
    def from_values(cls, values: Iterable[ScalarLike], modulus: int, field: FieldDescriptor) -> "TruncatedPoly":
        """Pad with zeros or truncate so the result has exactly `modulus` coefficients."""
        values = list(values)[:modulus]
        values += [0] * (modulus - len(values))
        return cls(values, field)

    @classmethod
    def zero(cls, modulus: int, field: FieldDescriptor) -> "TruncatedPoly":
        return cls([0] * modulus, field)

    @classmethod
    def one(cls, modulus: int, field: FieldDescriptor) -> "TruncatedPoly":
        return cls.monomial(0, modulus, field)

    @classmethod
    def monomial(cls, power: int, modulus: int, field: FieldDescriptor) -> "TruncatedPoly":
        """t^power, which is zero once power >= modulus."""
        values = [0] * modulus
        if power < modulus:
            values[power] = 1
        return cls(values, field)

    @classmethod
    def parse(cls, text: str, modulus: int, field: FieldDescriptor, var: str = "t") -> "TruncatedPoly":
        """Parse an expression in one variable (default t) and truncate it."""
        from .parser import parse_poly

        poly = parse_poly(text, (var,), field)
        values = [field.zero()] * modulus
        for (power,), coeff in poly.items():
            if power < modulus:
                values[power] = coeff
        return cls(values, field)

    # ------------------------------------------------------------------ accessors

    @property
    def modulus(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    def __getitem__(self, index: int) -> Scalar:
        return self._coeffs[index]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def is_unit(self) -> bool:
        """Units of k[t]/<t^n> are exactly the elements with nonzero constant term."""
        return not self._coeffs[0].is_zero()

    def valuation(self) -> int:
        """Largest k with t^k dividing self; the modulus for zero."""
        for index, c in enumerate(self._coeffs):
            if not c.is_zero():
                return index
        return self.modulus

    # ------------------------------------------------------------------ arithmetic

    def _check_compatible(self, other: "TruncatedPoly"):
        if self._field != other._field:
            raise FieldMismatchError(f"Cannot combine {self._field} and {other._field} truncated polynomials")
        if self.modulus != other.modulus:
            raise ShapeMismatchError(f"Modulus mismatch: t^{self.modulus} vs t^{other.modulus}")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        return TruncatedPoly([a + b for a, b in zip(self._coeffs, other._coeffs)], self._field)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check_compatible(other)
        return TruncatedPoly([a - b for a, b in zip(self._coeffs, other._coeffs)], self._field)

    def __neg__(self) -> "TruncatedPoly":
        return TruncatedPoly([-a for a in self._coeffs], self._field)

    def __mul__(self, other) -> "TruncatedPoly":
        if isinstance(other, TruncatedPoly):
            return trunc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "TruncatedPoly":
        return self.scale(other)

    def scale(self, factor: ScalarLike) -> "TruncatedPoly":
        factor = self._field(factor)
        return TruncatedPoly([factor * a for a in self._coeffs], self._field)

    def shift(self, times: int = 1) -> "TruncatedPoly":
        """Multiply by t^times."""
        zero = self._field.zero()
        n = self.modulus
        values = [zero] * min(times, n) + list(self._coeffs[:max(0, n - times)])
        return TruncatedPoly(values, self._field)

    def __pow__(self, exponent: int) -> "TruncatedPoly":
        if exponent < 0:
            return trunc_invert(self) ** (-exponent)
        result = TruncatedPoly.one(self.modulus, self._field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def invert(self) -> "TruncatedPoly":
        return trunc_invert(self)

    # ------------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self._field == other._field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        from .polynomials import MultiPoly

        terms = {(power,): c for power, c in enumerate(self._coeffs) if not c.is_zero()}
        return str(MultiPoly(("t",), self._field, terms))

    def __repr__(self) -> str:
        return f"TruncatedPoly({self}, mod t^{self.modulus}, {self._field})"


def trunc_mul(p: TruncatedPoly, q: TruncatedPoly) -> TruncatedPoly:
    """Product in k[t]/<t^n>: the convolution of the coefficients, truncated at t^n."""
    p._check_compatible(q)
    n = p.modulus
    zero = p.field.zero()
    values = [zero] * n
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j in range(n - i):
            b = q.coeffs[j]
            if not b.is_zero():
                values[i + j] = values[i + j] + a * b
    return TruncatedPoly(values, p.field)


def trunc_invert(p: TruncatedPoly) -> TruncatedPoly:
    """
    Inverse of a unit of k[t]/<t^n> by coefficient recursion:
    c_0 = 1/p_0 and c_k = -(1/p_0) * sum_{j=1..k} p_j c_{k-j}.
    """
    if not p.is_unit():
        raise NotAUnitError(f"{p} has zero constant term and is not a unit mod t^{p.modulus}")
    inv_p0 = p.coeffs[0].inverse()
    result = [inv_p0]
    for k in range(1, p.modulus):
        acc = p.field.zero()
        for j in range(1, k + 1):
            acc = acc + p.coeffs[j] * result[k - j]
        result.append(-inv_p0 * acc)
    return TruncatedPoly(result, p.field)
