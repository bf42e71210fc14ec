# quotfib/algebra/polynomials.py
"""
Sparse Multivariate Polynomials
===============================
Exact-coefficient polynomials as maps from exponent vectors to nonzero
Scalars, over an ordered variable context. Terms are ordered graded
lexicographically (first declared variable largest) for printing, leading
terms and division.

Also provides BinaryForm, a homogeneous form in (x, y) that keeps an
explicit degree tag so the zero form still knows its degree.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union
import logging

from ..core.errors import (
    FieldMismatchError, IndivisibleError, QuotfibError, ShapeMismatchError, UndeclaredVariableError,
)
from .scalars import FieldDescriptor, Scalar, ScalarLike

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


def grlex_key(exponents: Exponents) -> tuple:
    """Sort key for graded-lex order; larger key means larger monomial."""
    return (sum(exponents), exponents)


def _format_monomial(vars: Sequence[str], exponents: Exponents) -> str:
    parts = []
    for name, power in zip(vars, exponents):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return "*".join(parts)


class MultiPoly:
    """Immutable sparse polynomial over a FieldDescriptor in an ordered variable context."""

    __slots__ = ("_vars", "_field", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], field: FieldDescriptor,
                 terms: Optional[Mapping[Exponents, ScalarLike]] = None):
        self._vars = tuple(vars)
        if len(set(self._vars)) != len(self._vars):
            raise ShapeMismatchError(f"Duplicate variable names in {self._vars}")
        self._field = field
        clean: Dict[Exponents, Scalar] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != len(self._vars):
                raise ShapeMismatchError(
                    f"Exponent vector {exponents} does not match variables {self._vars}"
                )
            if any(e < 0 for e in exponents):
                raise ShapeMismatchError(f"Negative exponent in {exponents}")
            value = Scalar(coeff, field)
            if not value.is_zero():
                clean[exponents] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, vars: Tuple[str, ...], field: FieldDescriptor,
                    terms: Dict[Exponents, Scalar]) -> "MultiPoly":
        """Wrap an already-normalized term map (no zero coefficients, right lengths)."""
        poly = object.__new__(cls)
        poly._vars = vars
        poly._field = field
        poly._terms = terms
        poly._hash = None
        return poly

    # ------------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, vars: Sequence[str], field: FieldDescriptor) -> "MultiPoly":
        return cls(vars, field)

    @classmethod
    def constant(cls, value: ScalarLike, vars: Sequence[str], field: FieldDescriptor) -> "MultiPoly":
        return cls(vars, field, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str], field: FieldDescriptor) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise UndeclaredVariableError(name, vars)
        exponents = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, field, {exponents: 1})

    @classmethod
    def gens(cls, vars: Sequence[str], field: FieldDescriptor) -> Tuple["MultiPoly", ...]:
        """One MultiPoly per declared variable, in declaration order."""
        return tuple(cls.variable(name, vars, field) for name in vars)

    # ------------------------------------------------------------------ accessors

    @property
    def vars(self) -> Tuple[str, ...]:
        return self._vars

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    @property
    def terms(self) -> Mapping[Exponents, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Scalar]]:
        """Terms in descending graded-lex order."""
        for exponents in sorted(self._terms, key=grlex_key, reverse=True):
            yield exponents, self._terms[exponents]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(sum(exponents) == 0 for exponents in self._terms)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise QuotfibError(f"{self} is not constant")
        return self._terms.get((0,) * len(self._vars), self._field.zero())

    def coefficient(self, exponents: Exponents) -> Scalar:
        return self._terms.get(tuple(exponents), self._field.zero())

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exponents) for exponents in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        index = self._index(var)
        return max((exponents[index] for exponents in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        """Zero counts as homogeneous (of every degree)."""
        return len({sum(exponents) for exponents in self._terms}) <= 1

    def variables_used(self) -> Tuple[str, ...]:
        used = set()
        for exponents in self._terms:
            used.update(i for i, e in enumerate(exponents) if e)
        return tuple(self._vars[i] for i in sorted(used))

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        """Graded-lex leading (exponents, coefficient)."""
        if not self._terms:
            raise QuotfibError("The zero polynomial has no leading term")
        exponents = max(self._terms, key=grlex_key)
        return exponents, self._terms[exponents]

    def leading_coefficient(self) -> Scalar:
        return self.leading_term()[1]

    def _index(self, var: str) -> int:
        try:
            return self._vars.index(var)
        except ValueError:
            raise UndeclaredVariableError(var, self._vars)

    # ------------------------------------------------------------------ context handling

    def _check_compatible(self, other: "MultiPoly"):
        if self._field != other._field:
            raise FieldMismatchError(f"Cannot combine {self._field} and {other._field} polynomials")
        if self._vars != other._vars:
            raise ShapeMismatchError(f"Variable contexts differ: {self._vars} vs {other._vars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return MultiPoly.constant(other, self._vars, self._field)
        return NotImplemented

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-embed into another variable context containing every variable used."""
        vars = tuple(vars)
        if vars == self._vars:
            return self
        positions = []
        for index, name in enumerate(self._vars):
            if name in vars:
                positions.append(vars.index(name))
            else:
                positions.append(None)
        terms = {}
        for exponents, coeff in self._terms.items():
            new = [0] * len(vars)
            for index, power in enumerate(exponents):
                if power:
                    if positions[index] is None:
                        raise UndeclaredVariableError(self._vars[index], vars)
                    new[positions[index]] = power
            terms[tuple(new)] = coeff
        return MultiPoly._from_clean(vars, self._field, terms)

    def change_field(self, field: FieldDescriptor) -> "MultiPoly":
        """Reduce rational coefficients into GF(p); NotAUnitError if a denominator vanishes mod p."""
        if field == self._field:
            return self
        if self._field.is_prime_field:
            raise FieldMismatchError(f"Cannot move coefficients from {self._field} to {field}")
        return MultiPoly(self._vars, field, {e: c.value for e, c in self._terms.items()})

    # ------------------------------------------------------------------ arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponents, coeff in other._terms.items():
            value = terms[exponents] + coeff if exponents in terms else coeff
            if value.is_zero():
                terms.pop(exponents, None)
            else:
                terms[exponents] = value
        return MultiPoly._from_clean(self._vars, self._field, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean(self._vars, self._field, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                value = terms[exponents] + c1 * c2 if exponents in terms else c1 * c2
                if value.is_zero():
                    terms.pop(exponents, None)
                else:
                    terms[exponents] = value
        return MultiPoly._from_clean(self._vars, self._field, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise QuotfibError("Polynomials only take non-negative integer powers")
        result = MultiPoly.constant(1, self._vars, self._field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: ScalarLike) -> "MultiPoly":
        factor = self._field(factor)
        if factor.is_zero():
            return MultiPoly.zero(self._vars, self._field)
        return MultiPoly._from_clean(self._vars, self._field, {e: factor * c for e, c in self._terms.items()})

    def monic(self) -> "MultiPoly":
        """Scale so the graded-lex leading coefficient is 1; zero stays zero."""
        if not self._terms:
            return self
        return self.scale(self.leading_coefficient().inverse())

    # ------------------------------------------------------------------ monomial content

    def monomial_content(self) -> Exponents:
        """Componentwise minimum exponent: the monomial gcd of the terms."""
        if not self._terms:
            return (0,) * len(self._vars)
        return tuple(min(column) for column in zip(*self._terms))

    def divide_by_monomial(self, exponents: Exponents) -> "MultiPoly":
        terms = {}
        for e, c in self._terms.items():
            reduced = tuple(a - b for a, b in zip(e, exponents))
            if any(x < 0 for x in reduced):
                raise IndivisibleError(f"{self} is not divisible by monomial {_format_monomial(self._vars, exponents)}")
            terms[reduced] = c
        return MultiPoly._from_clean(self._vars, self._field, terms)

    # ------------------------------------------------------------------ evaluation and substitution

    def evaluate(self, point: Union[Mapping[str, ScalarLike], Sequence[ScalarLike]]) -> Scalar:
        """Value at a point given as a name mapping or a sequence in declaration order."""
        if isinstance(point, Mapping):
            values = []
            for name in self._vars:
                if name in point:
                    values.append(self._field(point[name]))
                else:
                    values.append(None)
        else:
            if len(point) != len(self._vars):
                raise ShapeMismatchError(f"Point has {len(point)} coordinates, expected {len(self._vars)}")
            values = [self._field(v) for v in point]
        total = self._field.zero()
        for exponents, coeff in self._terms.items():
            term = coeff
            for index, power in enumerate(exponents):
                if power:
                    if values[index] is None:
                        raise QuotfibError(f"No value given for variable '{self._vars[index]}'")
                    term = term * values[index] ** power
            total = total + term
        return total

    def evaluator(self) -> Callable[[Sequence[int]], int]:
        """
        Fast evaluation at integer points of a prime field; returns an int in [0, p).
        Points are sequences of ints in declaration order.
        """
        if not self._field.is_prime_field:
            raise QuotfibError("Integer evaluators exist only over prime fields")
        p = self._field.characteristic
        compiled = [
            (coeff.value, tuple((index, power) for index, power in enumerate(exponents) if power))
            for exponents, coeff in self._terms.items()
        ]

        def evaluate(point: Sequence[int]) -> int:
            total = 0
            for coeff, factors in compiled:
                term = coeff
                for index, power in factors:
                    term = term * pow(point[index], power, p)
                total += term
            return total % p

        return evaluate

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """
        Simultaneous substitution. Unbound variables pass through. The result
        keeps this context when every binding lives in it, otherwise the
        context is the unbound variables followed by the bindings' new ones.
        """
        for name, poly in bindings.items():
            self._index(name)
            if poly._field != self._field:
                raise FieldMismatchError(f"Binding for '{name}' is over {poly._field}, expected {self._field}")

        if not bindings:
            return self

        if all(set(poly._vars) <= set(self._vars) for poly in bindings.values()):
            target_vars = self._vars
        else:
            target = [name for name in self._vars if name not in bindings]
            for poly in bindings.values():
                for name in poly._vars:
                    if name not in target:
                        target.append(name)
            target_vars = tuple(target)

        images = []
        for name in self._vars:
            if name in bindings:
                images.append(bindings[name].with_vars(target_vars))
            else:
                images.append(MultiPoly.variable(name, target_vars, self._field))

        power_cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(index: int, exponent: int) -> MultiPoly:
            key = (index, exponent)
            if key not in power_cache:
                power_cache[key] = images[index] ** exponent
            return power_cache[key]

        result = MultiPoly.zero(target_vars, self._field)
        for exponents, coeff in self._terms.items():
            term = MultiPoly.constant(coeff, target_vars, self._field)
            for index, exponent in enumerate(exponents):
                if exponent:
                    term = term * power(index, exponent)
            result = result + term
        return result

    # ------------------------------------------------------------------ division

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """
        The quotient q with q * divisor == self, by graded-lex leading-term
        division; IndivisibleError as soon as a remainder term appears.
        """
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")

        lead_exponents, lead_coeff = divisor.leading_term()
        inv_lead = lead_coeff.inverse()
        remainder = dict(self._terms)
        quotient: Dict[Exponents, Scalar] = {}

        while remainder:
            exponents = max(remainder, key=grlex_key)
            shift = tuple(a - b for a, b in zip(exponents, lead_exponents))
            if any(x < 0 for x in shift):
                raise IndivisibleError(f"{self} is not divisible by {divisor}")
            factor = remainder[exponents] * inv_lead
            quotient[shift] = factor
            for d_exponents, d_coeff in divisor._terms.items():
                key = tuple(a + b for a, b in zip(shift, d_exponents))
                value = remainder.get(key, self._field.zero()) - factor * d_coeff
                if value.is_zero():
                    remainder.pop(key, None)
                else:
                    remainder[key] = value

        return MultiPoly._from_clean(self._vars, self._field, quotient)

    def divides(self, other: "MultiPoly") -> bool:
        """Whether self divides other exactly."""
        try:
            other.exact_divide(self)
        except IndivisibleError:
            return False
        return True

    def multiplicity_along(self, prime: "MultiPoly") -> int:
        """Largest k such that prime**k divides self exactly."""
        if self.is_zero():
            raise QuotfibError("Multiplicity along a prime is undefined for the zero polynomial")
        if prime.is_constant():
            raise QuotfibError(f"{prime} is constant, not a prime divisor")
        count = 0
        current = self
        while True:
            try:
                current = current.exact_divide(prime)
            except IndivisibleError:
                return count
            count += 1

    # ------------------------------------------------------------------ calculus

    def partial_derivative(self, var: str) -> "MultiPoly":
        index = self._index(var)
        terms: Dict[Exponents, Scalar] = {}
        for exponents, coeff in self._terms.items():
            power = exponents[index]
            if power == 0:
                continue
            value = coeff * power
            if value.is_zero():
                continue
            reduced = exponents[:index] + (power - 1,) + exponents[index + 1:]
            terms[reduced] = value
        return MultiPoly._from_clean(self._vars, self._field, terms)

    def gradient(self) -> Tuple["MultiPoly", ...]:
        return tuple(self.partial_derivative(name) for name in self._vars)

    # ------------------------------------------------------------------ comparison and printing

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._field == other._field and self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (Scalar, int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for position, (exponents, coeff) in enumerate(self.items()):
            value = coeff.value
            negative = (not self._field.is_prime_field) and value < 0
            magnitude = -value if negative else value
            monomial = _format_monomial(self._vars, exponents)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self}, vars={self._vars}, {self._field})"


def substitute(p: MultiPoly, bindings: Mapping[str, MultiPoly]) -> MultiPoly:
    return p.substitute(bindings)


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    return p.exact_divide(d)


def multiplicity_along(p: MultiPoly, prime: MultiPoly) -> int:
    return p.multiplicity_along(prime)


def partial_derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.partial_derivative(var)


# ================================================================== Binary forms

FORM_VARS = ("x", "y")


class BinaryForm:
    """Homogeneous form of a fixed degree in (x, y); the zero form keeps its degree tag."""

    __slots__ = ("_poly", "_degree")

    def __init__(self, poly: MultiPoly, degree: Optional[int] = None):
        if poly.vars != FORM_VARS:
            poly = poly.with_vars(FORM_VARS)
        if degree is None:
            if poly.is_zero():
                raise ShapeMismatchError("The zero form needs an explicit degree")
            degree = poly.total_degree()
        if degree < 0:
            raise ShapeMismatchError("Form degrees are non-negative")
        for exponents in poly.terms:
            if sum(exponents) != degree:
                raise ShapeMismatchError(f"{poly} is not homogeneous of degree {degree}")
        self._poly = poly
        self._degree = degree

    @classmethod
    def zero(cls, degree: int, field: FieldDescriptor) -> "BinaryForm":
        return cls(MultiPoly.zero(FORM_VARS, field), degree)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[ScalarLike], field: FieldDescriptor) -> "BinaryForm":
        """Coefficients of x^d, x^{d-1} y, ..., y^d."""
        degree = len(coeffs) - 1
        terms = {(degree - i, i): c for i, c in enumerate(coeffs)}
        return cls(MultiPoly(FORM_VARS, field, terms), degree)

    @classmethod
    def parse(cls, text: str, degree: int, field: FieldDescriptor) -> "BinaryForm":
        from .parser import parse_poly

        return cls(parse_poly(text, FORM_VARS, field), degree)

    @property
    def poly(self) -> MultiPoly:
        return self._poly

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def field(self) -> FieldDescriptor:
        return self._poly.field

    def coefficients(self) -> Tuple[Scalar, ...]:
        """Coefficients of x^d, x^{d-1} y, ..., y^d."""
        d = self._degree
        return tuple(self._poly.coefficient((d - i, i)) for i in range(d + 1))

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_degree(other)
        return BinaryForm(self._poly + other._poly, self._degree)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_degree(other)
        return BinaryForm(self._poly - other._poly, self._degree)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-self._poly, self._degree)

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            return BinaryForm(self._poly * other._poly, self._degree + other._degree)
        return BinaryForm(self._poly.scale(other), self._degree)

    __rmul__ = __mul__

    def _check_degree(self, other: "BinaryForm"):
        if self._degree != other._degree:
            raise ShapeMismatchError(f"Cannot add forms of degrees {self._degree} and {other._degree}")

    def normalized(self) -> "BinaryForm":
        """Scaled so the graded-lex leading coefficient is 1."""
        return BinaryForm(self._poly.monic(), self._degree)

    def evaluate(self, x: ScalarLike, y: ScalarLike) -> Scalar:
        return self._poly.evaluate((x, y))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self._degree == other._degree and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self._degree, self._poly))

    def __str__(self) -> str:
        return str(self._poly)

    def __repr__(self) -> str:
        return f"BinaryForm({self._poly}, degree={self._degree}, {self.field})"
