# quotfib/charts/elimination.py
"""
Linear Elimination
==================
User-ordered elimination of variables that occur as lone linear terms, and
the reduction of a residual system to a single target hypersurface under
extra substitutions.

Elimination never picks pivots on its own: each named variable is solved
from the first equation where it appears exactly once, as c*var with c a
nonzero constant, and the substitution is applied to the remaining equations
and to every earlier substitution.
"""

from typing import Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from pydantic import BaseModel, Field

from ..core.errors import EliminationError, QuotfibError
from ..algebra.polynomials import MultiPoly
from ..algebra.scalars import FieldDescriptor, Scalar, rationals
from .equations import ChartSpec, PolynomialSystem, generate_invariance_equations

logger = logging.getLogger(__name__)

DEGREE3_ELIMINATION_ORDER = ("d", "e", "f", "h")


class EliminationStep(BaseModel):
    """One solved variable: which equation was used and the solved value at that moment."""
    variable: str
    equation_index: int = Field(..., ge=0, description="Position of the equation in the working list")
    equation: str = Field(..., description="The equation used, as text")
    solution: str = Field(..., description="Value of the variable when it was solved")


class EliminationResult(BaseModel):
    """Substitutions (fully back-substituted) and the residual system."""
    substitutions: Dict[str, MultiPoly] = Field(default_factory=dict, description="Eliminated variable -> value")
    residual: PolynomialSystem = Field(..., description="Remaining normalized equations")
    steps: List[EliminationStep] = Field(default_factory=list, description="Elimination trace")

    model_config = {
        "arbitrary_types_allowed": True,
    }

    def to_report(self) -> dict:
        return {
            "substitutions": {name: str(value) for name, value in self.substitutions.items()},
            "residual": self.residual.as_strings(),
            "residual_vars": list(self.residual.vars),
            "steps": [step.model_dump() for step in self.steps],
        }


def _lone_linear_coefficient(equation: MultiPoly, var: str) -> Optional[Scalar]:
    """c if var occurs in equation only as the single term c*var, else None."""
    index = equation.vars.index(var)
    found = None
    for exponents, coeff in equation.terms.items():
        if exponents[index] == 0:
            continue
        if found is not None:
            return None
        if exponents[index] != 1 or sum(exponents) != 1:
            return None
        found = coeff
    return found


def eliminate_linear(system: PolynomialSystem, order: Sequence[str]) -> EliminationResult:
    """
    Solve the variables of `order` in turn. The residual lives in the
    variables that were not eliminated and its equations are normalized.
    """
    for var in order:
        if var not in system.vars:
            raise EliminationError(var, "not a declared variable")
    if len(set(order)) != len(order):
        raise QuotfibError(f"Elimination order names a variable twice: {order}")

    working = list(system.equations)
    substitutions: Dict[str, MultiPoly] = {}
    steps: List[EliminationStep] = []

    for var in order:
        chosen = None
        for position, equation in enumerate(working):
            coeff = _lone_linear_coefficient(equation, var)
            if coeff is not None:
                chosen = (position, equation, coeff)
                break
        if chosen is None:
            raise EliminationError(var, "no equation contains it as a lone linear term")

        position, equation, coeff = chosen
        var_poly = MultiPoly.variable(var, system.vars, equation.field)
        solution = -(equation - var_poly.scale(coeff)).scale(coeff.inverse())
        binding = {var: solution}

        working = [eq.substitute(binding) for i, eq in enumerate(working) if i != position]
        substitutions = {name: value.substitute(binding) for name, value in substitutions.items()}
        substitutions[var] = solution
        steps.append(EliminationStep(variable=var, equation_index=position, equation=str(equation),
                                     solution=str(solution)))
        logger.debug(f"Eliminated {var} = {solution} using {equation}")

    remaining = tuple(name for name in system.vars if name not in substitutions)
    residual = PolynomialSystem(vars=remaining, equations=[eq.with_vars(remaining) for eq in working if eq])
    return EliminationResult(
        substitutions={name: value.with_vars(remaining) for name, value in substitutions.items()},
        residual=residual.normalized(),
        steps=steps,
    )


# ================================================================== Reduction to a target

class ReductionVerdict(BaseModel):
    """Whether every residual generator becomes a scalar multiple of the target."""
    target: str
    passed: bool
    images: List[str] = Field(default_factory=list, description="Generator images after substitution")
    multipliers: List[Optional[Scalar]] = Field(default_factory=list,
                                                description="Scalar c with image = c*target, None if none exists")

    model_config = {
        "arbitrary_types_allowed": True,
    }

    def to_report(self) -> dict:
        return {
            "target": self.target,
            "passed": self.passed,
            "images": list(self.images),
            "multipliers": [None if m is None else str(m) for m in self.multipliers],
        }


def _common_context(p: MultiPoly, q: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    if p.vars == q.vars:
        return p, q
    context = list(p.vars) + [name for name in q.vars if name not in p.vars]
    return p.with_vars(context), q.with_vars(context)


def scalar_multiplier(image: MultiPoly, target: MultiPoly) -> Optional[Scalar]:
    """c with image == c * target, or None."""
    image, target = _common_context(image, target)
    if image.is_zero():
        return image.field.zero()
    c = image.leading_coefficient() / target.leading_coefficient()
    return c if image == target.scale(c) else None


def reduce_with_substitution(residual: PolynomialSystem, extra: Mapping[str, MultiPoly],
                             target: MultiPoly) -> ReductionVerdict:
    """Apply `extra` to every residual generator and test each image against the target."""
    if target.is_zero():
        raise QuotfibError("The reduction target must be nonzero")
    images, multipliers = [], []
    for generator in residual.equations:
        image = generator.substitute(extra)
        images.append(str(image))
        multipliers.append(scalar_multiplier(image, target))
    passed = all(m is not None for m in multipliers)
    logger.debug(f"Reduction to {target}: multipliers {[str(m) for m in multipliers]}")
    return ReductionVerdict(target=str(target), passed=passed, images=images, multipliers=multipliers)


# ================================================================== The degree-3 chart

def degree3_target(field: FieldDescriptor = None) -> MultiPoly:
    """a^3 - g*(b - a*c) over the variables (a, b, c, g, i)."""
    from ..algebra.parser import parse_poly

    return parse_poly("a^3 - g*(b - a*c)", ("a", "b", "c", "g", "i"), field or rationals())


def degree3_pipeline(field: FieldDescriptor = None) -> Tuple[PolynomialSystem, EliminationResult, ReductionVerdict]:
    """Equations of the n=3 chart, elimination of (d, e, f, h), then i -> -a against the target."""
    field = field or rationals()
    system = generate_invariance_equations(ChartSpec.standard(3), field)
    result = eliminate_linear(system, DEGREE3_ELIMINATION_ORDER)
    vars = result.residual.vars
    extra = {"i": -MultiPoly.variable("a", vars, field)}
    verdict = reduce_with_substitution(result.residual, extra, degree3_target(field))
    return system, result, verdict


def collected_substitutions(field: FieldDescriptor = None) -> Dict[str, MultiPoly]:
    """
    The n=3 chart matrix over the hypersurface a^3 = g(b - ac), in the
    variables (a, b, c, g): f = b, i = -a, d = -a^2 - cg, h = -d, e = cd - ab.
    """
    field = field or rationals()
    vars = ("a", "b", "c", "g")
    a, b, c, g = MultiPoly.gens(vars, field)
    d = -(a ** 2) - c * g
    return {
        "a": a, "b": b, "c": c,
        "d": d, "e": c * d - a * b, "f": b,
        "g": g, "h": -d, "i": -a,
    }


def collected_chart_matrix(field: FieldDescriptor = None) -> List[List[MultiPoly]]:
    """Rows (1 0 0 a b c / 0 1 0 d e f / 0 0 1 g h i) with the collected substitutions applied."""
    values = collected_substitutions(field)
    names = "abcdefghi"
    field = field or rationals()
    vars = ("a", "b", "c", "g")
    one = MultiPoly.constant(1, vars, field)
    zero = MultiPoly.zero(vars, field)
    rows = []
    for j in range(3):
        identity = [one if i == j else zero for i in range(3)]
        rows.append(identity + [values[names[3 * j + k]] for k in range(3)])
    return rows
