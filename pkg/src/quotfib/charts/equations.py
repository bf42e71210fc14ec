# quotfib/charts/equations.py
"""
Chart Equations
===============
Local equations of the variety Q_n of n-dimensional t-invariant subspaces of
M = (k[t]/<t^n>)^2 on an affine chart of the Grassmannian Gr(n, 2n).

A chart is fixed by a reference subspace W0 spanned by monomials w_1..w_n
and a complementary span of monomials c_1..c_n. Points of the chart are the
subspaces with tautological rows R_j = w_j + sum_k x_jk c_k. The subspace is
t-invariant iff every t*R_j equals sum_i alpha_ji R_i, where alpha_ji are
the W0-components of t*R_j; comparing complement components gives the
equations beta_jk - sum_i alpha_ji x_ik = 0.

Monomials are (block, power) pairs: (0, i) is u*t^i and (1, i) is v*t^i.
"""

from string import ascii_lowercase
from typing import List, Optional, Sequence, Tuple
import logging

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core.errors import ChartError, ShapeMismatchError
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import FieldDescriptor, prime_field, rationals
from ..modules.linalg import rank, rref
from ..modules.submodules import SubmoduleBasis

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]
BLOCK_NAMES = ("u", "v")


def monomial_name(monomial: Monomial) -> str:
    block, power = monomial
    name = BLOCK_NAMES[block]
    if power == 0:
        return name
    if power == 1:
        return f"{name}t"
    return f"{name}t^{power}"


# ================================================================== Chart specification

class ChartSpec(BaseModel):
    """An affine chart of Gr(n, 2n) adapted to the monomial basis of (k[t]/<t^n>)^2."""
    n: int = Field(..., ge=1, description="Truncation order")
    r: int = Field(default=2, description="Rank of the free module (fixed at 2)")
    reference: Tuple[Monomial, ...] = Field(..., description="Monomials spanning W0, one per chart row")
    complement: Tuple[Monomial, ...] = Field(..., description="Monomials spanning the complement of W0")
    variables: Tuple[str, ...] = Field(..., description="Chart matrix entries x_jk, row-major")

    model_config = {
        "frozen": True,
    }

    @field_validator('r')
    @classmethod
    def validate_rank(cls, v):
        if v != 2:
            raise ValueError("Chart equations are implemented for rank 2 only")
        return v

    @model_validator(mode='after')
    def validate_basis(self):
        """reference and complement partition the 2n monomials; n*n distinct variable names."""
        everything = [(block, power) for block in range(2) for power in range(self.n)]
        chosen = list(self.reference) + list(self.complement)
        if len(self.reference) != self.n or len(self.complement) != self.n:
            raise ValueError(f"Need {self.n} reference and {self.n} complement monomials")
        if sorted(chosen) != sorted(everything):
            raise ValueError("Reference and complement monomials do not form a basis of M")
        if len(self.variables) != self.n * self.n:
            raise ValueError(f"Need {self.n * self.n} chart variables, got {len(self.variables)}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("Chart variable names must be distinct")
        return self

    @classmethod
    def standard(cls, n: int) -> "ChartSpec":
        """
        W0 = Span(ut, ..., ut^(n-1), vt^(n-1)) with complement
        Span(u, v, vt, ..., vt^(n-2)); for n = 1, W0 = Span(u), complement Span(v).
        Letter variables a, b, c, ... row by row (n <= 5).
        """
        if n < 1 or n * n > len(ascii_lowercase):
            raise ChartError(f"Standard charts have letter variables for 1 <= n <= 5, got n={n}")
        if n == 1:
            reference: List[Monomial] = [(0, 0)]
            complement: List[Monomial] = [(1, 0)]
        else:
            reference = [(0, i) for i in range(1, n)] + [(1, n - 1)]
            complement = [(0, 0)] + [(1, i) for i in range(n - 1)]
        return cls(
            n=n,
            reference=tuple(reference),
            complement=tuple(complement),
            variables=tuple(ascii_lowercase[:n * n]),
        )

    def index(self, monomial: Monomial) -> int:
        """Coordinate index in the (u, ut, ..., v, vt, ...) ordering."""
        block, power = monomial
        return block * self.n + power

    def variable(self, row: int, col: int) -> str:
        return self.variables[row * self.n + col]

    def describe(self) -> str:
        w0 = ", ".join(monomial_name(m) for m in self.reference)
        rest = ", ".join(monomial_name(m) for m in self.complement)
        return f"W0 = Span({w0}), complement Span({rest})"


# ================================================================== Polynomial systems

class PolynomialSystem(BaseModel):
    """Equations in a shared variable context; zero equations are dropped."""
    vars: Tuple[str, ...] = Field(..., description="Declared variables")
    equations: List[MultiPoly] = Field(default_factory=list, description="Equations (= 0)")

    model_config = {
        "arbitrary_types_allowed": True,
    }

    @model_validator(mode='after')
    def validate_equations(self):
        """Every equation lives in the declared context; zeros are dropped."""
        cleaned = []
        for equation in self.equations:
            if equation.vars != self.vars:
                equation = equation.with_vars(self.vars)
            if not equation.is_zero():
                cleaned.append(equation)
        self.equations = cleaned
        return self

    @property
    def field(self) -> Optional[FieldDescriptor]:
        return self.equations[0].field if self.equations else None

    def __len__(self) -> int:
        return len(self.equations)

    def normalized(self) -> "PolynomialSystem":
        """Each equation scaled to graded-lex leading coefficient +1."""
        return PolynomialSystem(vars=self.vars, equations=[eq.monic() for eq in self.equations])

    def with_equations(self, extra: Sequence[MultiPoly]) -> "PolynomialSystem":
        return PolynomialSystem(vars=self.vars, equations=list(self.equations) + list(extra))

    def change_field(self, field: FieldDescriptor) -> "PolynomialSystem":
        return PolynomialSystem(vars=self.vars, equations=[eq.change_field(field) for eq in self.equations])

    def as_strings(self) -> List[str]:
        return [str(eq) for eq in self.equations]


# ================================================================== Equation generation

def _shift(monomial: Monomial, n: int) -> Optional[Monomial]:
    block, power = monomial
    return (block, power + 1) if power + 1 < n else None


def generate_invariance_equations(chart: ChartSpec, field: FieldDescriptor = None) -> PolynomialSystem:
    """
    The n*n equations beta_jk - sum_i alpha_ji x_ik of the chart, in row-major
    (j, k) order, zero equations dropped.
    """
    field = field or rationals()
    n = chart.n
    vars = chart.variables
    x = {name: MultiPoly.variable(name, vars, field) for name in vars}
    zero = MultiPoly.zero(vars, field)
    one = MultiPoly.constant(1, vars, field)

    position = {m: ("ref", i) for i, m in enumerate(chart.reference)}
    position.update({m: ("comp", k) for k, m in enumerate(chart.complement)})

    equations = []
    for j in range(n):
        alpha = [zero] * n
        beta = [zero] * n
        # t * R_j = t*w_j + sum_k x_jk t*c_k
        contributions = [(chart.reference[j], one)]
        contributions += [(chart.complement[k], x[chart.variable(j, k)]) for k in range(n)]
        for monomial, coefficient in contributions:
            image = _shift(monomial, n)
            if image is None:
                continue
            kind, slot = position[image]
            if kind == "ref":
                alpha[slot] = alpha[slot] + coefficient
            else:
                beta[slot] = beta[slot] + coefficient
        for k in range(n):
            combination = zero
            for i in range(n):
                if not alpha[i].is_zero():
                    combination = combination + alpha[i] * x[chart.variable(i, k)]
            equations.append(beta[k] - combination)

    system = PolynomialSystem(vars=vars, equations=equations)
    logger.debug(f"Chart n={n} ({chart.describe()}): {len(system)} equations")
    return system


# ================================================================== Chart points <-> subspaces

def chart_subspace(chart: ChartSpec, point: Sequence[int], q: int) -> SubmoduleBasis:
    """
    The subspace spanned by the rows R_j at an F_q point of the chart;
    ShapeMismatchError when the point is not a solution (not t-invariant).
    """
    if len(point) != len(chart.variables):
        raise ShapeMismatchError(f"Point has {len(point)} coordinates, chart has {len(chart.variables)}")
    field = prime_field(q)
    n = chart.n
    rows = []
    for j in range(n):
        row = [0] * (2 * n)
        row[chart.index(chart.reference[j])] = 1
        for k in range(n):
            row[chart.index(chart.complement[k])] = point[j * n + k] % q
        rows.append(row)
    return SubmoduleBasis(n, 2, field, rows)


def is_complementary(subspace: SubmoduleBasis, chart: ChartSpec) -> bool:
    """Whether subspace + Span(complement) is all of M, i.e. the subspace lies in the chart."""
    n = chart.n
    unit_rows = []
    for monomial in chart.complement:
        row = [0] * (2 * n)
        row[chart.index(monomial)] = 1
        unit_rows.append(row)
    return subspace.dim == n and rank(list(subspace.rows) + unit_rows, subspace.field, 2 * n) == 2 * n


def chart_point_of(subspace: SubmoduleBasis, chart: ChartSpec) -> Tuple[int, ...]:
    """
    Chart coordinates (x_jk, row-major) of a complementary subspace over a
    prime field, as ints: reduce the rows so the W0 block is the identity.
    """
    if not is_complementary(subspace, chart):
        raise ChartError("Subspace is not in this chart")
    n = chart.n
    order = [chart.index(m) for m in chart.reference] + [chart.index(m) for m in chart.complement]
    permuted = [[row[i] for i in order] for row in subspace.rows]
    echelon, _ = rref(permuted, subspace.field, 2 * n)
    return tuple(echelon[j][n + k].value for j in range(n) for k in range(n))
