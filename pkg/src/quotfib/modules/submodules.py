# quotfib/modules/submodules.py
"""
Truncated Modules
=================
Submodules of M = (k[t]/<t^n>)^r seen as t-invariant linear subspaces of the
nr-dimensional space with coordinates ordered

    u1, u1*t, ..., u1*t^(n-1), u2, u2*t, ..., ur*t^(n-1)

Provides module elements, row-reduced submodule bases, module-type
classification, the cyclic kernel of a torsion quotient, and the two chart
descriptions of cyclic rank-2 submodules with their transition map.
"""

from typing import List, Optional, Sequence, Tuple
import logging

from pydantic import BaseModel, Field, field_validator

from ..core.errors import ChartError, NotAUnitError, ShapeMismatchError
from ..algebra.scalars import FieldDescriptor, Scalar, ScalarLike
from ..algebra.truncated import TruncatedPoly, trunc_invert
from .linalg import Row, in_row_space, rank, rref

logger = logging.getLogger(__name__)


# ================================================================== Module elements

class ModuleElement:
    """An r-tuple of TruncatedPoly sharing modulus and field."""

    __slots__ = ("_components",)

    def __init__(self, components: Sequence[TruncatedPoly]):
        components = tuple(components)
        if not components:
            raise ShapeMismatchError("A module element needs at least one component")
        first = components[0]
        for component in components[1:]:
            first._check_compatible(component)
        self._components = components

    @classmethod
    def from_vector(cls, vector: Sequence[ScalarLike], n: int, r: int, field: FieldDescriptor) -> "ModuleElement":
        if len(vector) != n * r:
            raise ShapeMismatchError(f"Vector of length {len(vector)} does not fit rank {r}, modulus {n}")
        return cls([TruncatedPoly(vector[j * n:(j + 1) * n], field) for j in range(r)])

    @classmethod
    def parse(cls, text: str, n: int, field: FieldDescriptor) -> "ModuleElement":
        """Parse "(expr, expr, ...)" with expressions in t."""
        from ..algebra.parser import split_top_level

        return cls([TruncatedPoly.parse(part, n, field) for part in split_top_level(text)])

    @property
    def components(self) -> Tuple[TruncatedPoly, ...]:
        return self._components

    @property
    def n(self) -> int:
        return self._components[0].modulus

    @property
    def r(self) -> int:
        return len(self._components)

    @property
    def field(self) -> FieldDescriptor:
        return self._components[0].field

    def vector(self) -> Row:
        """Coordinates in the (u1, u1 t, ..., ur t^(n-1)) basis."""
        return tuple(c for component in self._components for c in component.coeffs)

    def shift(self, times: int = 1) -> "ModuleElement":
        """Multiply by t^times."""
        return ModuleElement([component.shift(times) for component in self._components])

    def is_zero(self) -> bool:
        return all(component.is_zero() for component in self._components)

    def __getitem__(self, index: int) -> TruncatedPoly:
        return self._components[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(component) for component in self._components) + ")"

    def __repr__(self) -> str:
        return f"ModuleElement{self}"


def shift_vector(vector: Sequence, n: int, r: int, zero) -> tuple:
    """t times a coordinate vector: within each block move coefficient i to i+1, dropping t^n."""
    shifted = []
    for j in range(r):
        block = vector[j * n:(j + 1) * n]
        shifted.append(zero)
        shifted.extend(block[:n - 1])
    return tuple(shifted)


# ================================================================== Module types

class ModuleType(BaseModel):
    """Isomorphism type of a finite-length k[t]-module: the partition of its cyclic summand lengths."""
    partition: Tuple[int, ...] = Field(..., description="Weakly decreasing positive summand lengths")

    model_config = {
        "frozen": True,
    }

    @field_validator('partition')
    @classmethod
    def validate_partition(cls, v):
        """Positive and weakly decreasing."""
        if any(part <= 0 for part in v):
            raise ValueError(f"Partition parts must be positive: {v}")
        if any(a < b for a, b in zip(v, v[1:])):
            raise ValueError(f"Partition must be weakly decreasing: {v}")
        return v

    @classmethod
    def of(cls, *parts: int) -> "ModuleType":
        return cls(partition=tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_label(cls, label: str) -> "ModuleType":
        """Inverse of str(): "(2,1)" or "()"."""
        inner = label.strip().strip("()")
        if not inner:
            return cls(partition=())
        return cls.of(*(int(part) for part in inner.split(",")))

    @property
    def length(self) -> int:
        """Total length, i.e. the dimension of the module over k."""
        return sum(self.partition)

    @property
    def parts(self) -> int:
        return len(self.partition)

    def is_cyclic(self) -> bool:
        return len(self.partition) <= 1

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.partition) + ")"


def partition_from_dims(dims: Sequence[int]) -> Tuple[int, ...]:
    """
    Partition from d_j = dim(t^j S), j = 0, 1, ...: the number of parts larger
    than j is d_j - d_{j+1}; the partition is the conjugate of that sequence.
    """
    larger_than = [dims[j] - dims[j + 1] for j in range(len(dims) - 1)]
    count = larger_than[0] if larger_than else 0
    return tuple(sum(1 for c in larger_than if c > i) for i in range(count))


# ================================================================== Submodule bases

class SubmoduleBasis:
    """
    Row-reduced basis of a t-invariant subspace of (k[t]/<t^n>)^r.
    Equality of submodules is equality of the reduced rows.
    """

    __slots__ = ("_n", "_r", "_field", "_rows", "_pivots")

    def __init__(self, n: int, r: int, field: FieldDescriptor, rows: Sequence[Sequence[ScalarLike]],
                 check_invariance: bool = True):
        if n < 1 or r < 1:
            raise ShapeMismatchError(f"Need n >= 1 and r >= 1, got n={n}, r={r}")
        for row in rows:
            if len(row) != n * r:
                raise ShapeMismatchError(f"Row of length {len(row)} in a space of dimension {n * r}")
        self._n = n
        self._r = r
        self._field = field
        self._rows, self._pivots = rref(rows, field, n * r) if rows else ([], [])
        if check_invariance and not self.is_t_invariant():
            raise ShapeMismatchError("Subspace is not t-invariant")

    @classmethod
    def _from_reduced(cls, n: int, r: int, field: FieldDescriptor, rows: List[Row], pivots: List[int]) -> "SubmoduleBasis":
        """Wrap rows already in reduced row-echelon form and known to be t-invariant."""
        basis = object.__new__(cls)
        basis._n = n
        basis._r = r
        basis._field = field
        basis._rows = rows
        basis._pivots = pivots
        return basis

    @classmethod
    def full(cls, n: int, r: int, field: FieldDescriptor) -> "SubmoduleBasis":
        rows = [[1 if i == j else 0 for i in range(n * r)] for j in range(n * r)]
        return cls(n, r, field, rows)

    @classmethod
    def zero(cls, n: int, r: int, field: FieldDescriptor) -> "SubmoduleBasis":
        return cls(n, r, field, [])

    @property
    def n(self) -> int:
        return self._n

    @property
    def r(self) -> int:
        return self._r

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    @property
    def rows(self) -> Tuple[Row, ...]:
        return tuple(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(self._pivots)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def elements(self) -> List[ModuleElement]:
        return [ModuleElement.from_vector(row, self._n, self._r, self._field) for row in self._rows]

    def contains_vector(self, vector: Sequence[Scalar]) -> bool:
        return in_row_space([self._field(x) for x in vector], self._rows, self._pivots)

    def is_t_invariant(self) -> bool:
        zero = self._field.zero()
        return all(self.contains_vector(shift_vector(row, self._n, self._r, zero)) for row in self._rows)

    def t_power_dims(self) -> List[int]:
        """[dim S, dim tS, dim t^2 S, ..., 0]."""
        zero = self._field.zero()
        dims = [self.dim]
        current = list(self._rows)
        while dims[-1] > 0:
            current = [shift_vector(row, self._n, self._r, zero) for row in current]
            current, _ = rref(current, self._field, self._n * self._r) if current else ([], [])
            dims.append(len(current))
        return dims

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubmoduleBasis):
            return NotImplemented
        return (self._n, self._r, self._field, self._rows) == (other._n, other._r, other._field, other._rows)

    def __hash__(self) -> int:
        return hash((self._n, self._r, tuple(self._rows)))

    def __str__(self) -> str:
        return "<" + ", ".join(str(element) for element in self.elements()) + ">"

    def __repr__(self) -> str:
        return f"SubmoduleBasis(n={self._n}, r={self._r}, dim={self.dim}, {self._field})"


# ================================================================== Operations

def t_invariant(rows: Sequence[Sequence[ScalarLike]], n: int, r: int, field: FieldDescriptor) -> bool:
    """Whether the span of rows satisfies t * V within V."""
    for row in rows:
        if len(row) != n * r:
            raise ShapeMismatchError(f"Row of length {len(row)} in a space of dimension {n * r}")
    if not rows:
        return True
    echelon, pivots = rref(rows, field, n * r)
    zero = field.zero()
    return all(in_row_space(shift_vector(row, n, r, zero), echelon, pivots) for row in echelon)


def membership(v: ModuleElement, s: SubmoduleBasis) -> bool:
    if (v.n, v.r) != (s.n, s.r):
        raise ShapeMismatchError(f"Element of shape (n={v.n}, r={v.r}) vs submodule (n={s.n}, r={s.r})")
    if v.field != s.field:
        raise ShapeMismatchError(f"Element over {v.field}, submodule over {s.field}")
    return s.contains_vector(v.vector())


def t_closure(generators: Sequence[ModuleElement], n: int = None, r: int = None,
              field: FieldDescriptor = None) -> SubmoduleBasis:
    """The submodule generated by the given elements: the span of all t^k * g."""
    if generators:
        n, r, field = generators[0].n, generators[0].r, generators[0].field
    if n is None or r is None or field is None:
        raise ShapeMismatchError("t_closure of no generators needs n, r and field")
    rows = []
    for generator in generators:
        if (generator.n, generator.r, generator.field) != (n, r, field):
            raise ShapeMismatchError("Generators must share modulus, rank and field")
        for k in range(n):
            shifted = generator.shift(k)
            if shifted.is_zero():
                break
            rows.append(shifted.vector())
    if not rows:
        return SubmoduleBasis.zero(n, r, field)
    echelon, pivots = rref(rows, field, n * r)
    return SubmoduleBasis._from_reduced(n, r, field, echelon, pivots)


def cyclic_kernel(e: TruncatedPoly, h: TruncatedPoly) -> Tuple[ModuleElement, SubmoduleBasis]:
    """
    Kernel of (f, g) -> f*e + g*h from (k[t]/<t^n>)^2 onto k[t]/<t^n>.
    When e or h is a unit the kernel is cyclic, generated by (-h, e).
    """
    e._check_compatible(h)
    if not (e.is_unit() or h.is_unit()):
        raise NotAUnitError(
            f"Neither {e} nor {h} is a unit mod t^{e.modulus}; the map is not onto a cyclic module of length n"
        )
    generator = ModuleElement([-h, e])
    basis = t_closure([generator])
    logger.debug(f"cyclic_kernel({e}, {h}) = <{generator}> of dim {basis.dim}")
    return generator, basis


def classify_type(s: SubmoduleBasis) -> ModuleType:
    return ModuleType(partition=partition_from_dims(s.t_power_dims()))


# ================================================================== Charts of cyclic rank-2 submodules

class ChartCoordinates(BaseModel):
    """Where a rank-2 submodule sits in the charts U = <(m(t), 1)> and V = <(1, l(t))>."""
    n: int = Field(..., ge=1, description="Modulus")
    module_type: ModuleType = Field(..., description="Classified type of the submodule")
    u_coords: Optional[Tuple[Scalar, ...]] = Field(None, description="m-coefficients when the submodule lies in U")
    v_coords: Optional[Tuple[Scalar, ...]] = Field(None, description="l-coefficients when the submodule lies in V")

    model_config = {
        "arbitrary_types_allowed": True,
        "frozen": True,
    }

    @property
    def in_u(self) -> bool:
        return self.u_coords is not None

    @property
    def in_v(self) -> bool:
        return self.v_coords is not None

    @property
    def description(self) -> str:
        if not self.in_u and not self.in_v:
            return "non-cyclic" if not self.module_type.is_cyclic() else "outside both charts"
        charts = [name for name, inside in (("U", self.in_u), ("V", self.in_v)) if inside]
        return "chart " + " and ".join(charts)

    def to_report(self) -> dict:
        return {
            "n": self.n,
            "type": str(self.module_type),
            "u_coords": [str(c) for c in self.u_coords] if self.in_u else None,
            "v_coords": [str(c) for c in self.v_coords] if self.in_v else None,
            "description": self.description,
        }


def _generator_coords(s: SubmoduleBasis, lead_block: int) -> Optional[Tuple[Scalar, ...]]:
    """
    Coordinates of the generator whose lead_block component is 1, if the
    projection of s onto that block is an isomorphism.
    """
    n = s.n
    other_block = 1 - lead_block
    order = list(range(lead_block * n, (lead_block + 1) * n)) + list(range(other_block * n, (other_block + 1) * n))
    permuted = [[row[i] for i in order] for row in s.rows]
    echelon, pivots = rref(permuted, s.field, 2 * n) if permuted else ([], [])
    if pivots != list(range(n)):
        return None
    return tuple(echelon[0][n:])


def chart_coords(s: SubmoduleBasis) -> ChartCoordinates:
    """Membership and coordinates of s in the charts U and V."""
    if s.r != 2:
        raise ChartError(f"Chart coordinates are defined for rank 2 only, got r={s.r}")
    module_type = classify_type(s)
    u_coords = v_coords = None
    if s.dim == s.n:
        u_coords = _generator_coords(s, lead_block=1)
        v_coords = _generator_coords(s, lead_block=0)
    return ChartCoordinates(n=s.n, module_type=module_type, u_coords=u_coords, v_coords=v_coords)


def submodule_from_u_coords(m_coeffs: Sequence[ScalarLike], field: FieldDescriptor) -> SubmoduleBasis:
    """The cyclic submodule <(m(t), 1)>."""
    n = len(m_coeffs)
    m = TruncatedPoly(m_coeffs, field)
    return t_closure([ModuleElement([m, TruncatedPoly.one(n, field)])])


def submodule_from_v_coords(l_coeffs: Sequence[ScalarLike], field: FieldDescriptor) -> SubmoduleBasis:
    """The cyclic submodule <(1, l(t))>."""
    n = len(l_coeffs)
    l = TruncatedPoly(l_coeffs, field)
    return t_closure([ModuleElement([TruncatedPoly.one(n, field), l])])


def chart_transition(m_coeffs: Sequence[ScalarLike], field: FieldDescriptor = None) -> Tuple[Scalar, ...]:
    """
    U-to-V chart transition: the coefficients of 1/m(t) mod t^n.
    Involutive on vectors with nonzero first coefficient.
    """
    if not m_coeffs:
        raise ShapeMismatchError("Chart coordinates need n >= 1")
    if field is None:
        first = m_coeffs[0]
        if not isinstance(first, Scalar):
            raise ShapeMismatchError("Pass a field or Scalar coordinates")
        field = first.field
    m = TruncatedPoly(m_coeffs, field)
    if not m.is_unit():
        raise ChartError("First coordinate is zero: the point is not in the overlap of the charts")
    return trunc_invert(m).coeffs
