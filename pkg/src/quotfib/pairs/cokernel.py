# quotfib/pairs/cokernel.py
"""
Cokernel Divisors
=================
The divisor of coker(M) on P^1 for a stable form matrix over a prime field,
computed locally in truncated coordinates, against the root multiplicities
of det M.

At a point p the local ring is replaced by k[t]/<t^N> with t a coordinate
vanishing at p and N = deg det M + 1, which exceeds every local elementary
divisor exponent. The image of M is the t-closure of its columns and the
local cokernel length is r*N minus its dimension.
"""

from typing import List, Optional, Tuple
import logging

from ..core.errors import QuotfibError
from ..algebra.polynomials import FORM_VARS, BinaryForm, MultiPoly
from ..algebra.truncated import TruncatedPoly
from ..modules.submodules import ModuleElement, cyclic_kernel, t_closure
from .forms import FormMatrix
from .invariants import pair_invariant

logger = logging.getLogger(__name__)

Point = Tuple[int, int]
PointDivisor = List[Tuple[Point, int]]


def projective_line(q: int) -> List[Point]:
    """(1:0) followed by (a:1) for a in F_q."""
    return [(1, 0)] + [(a, 1) for a in range(q)]


def _require_prime_field(mat: FormMatrix) -> int:
    if not mat.field.is_prime_field:
        raise QuotfibError("Cokernel divisors are computed over prime fields")
    return mat.field.characteristic


def det_divisor(mat: FormMatrix) -> PointDivisor:
    """Roots of det M on P^1(F_q) with multiplicities; QuotfibError if det M does not split."""
    q = _require_prime_field(mat)
    det = pair_invariant(mat).det_class
    x, y = MultiPoly.gens(FORM_VARS, mat.field)
    divisor = []
    for a, b in projective_line(q):
        linear = x.scale(b) - y.scale(a)
        mult = det.poly.multiplicity_along(linear)
        if mult:
            divisor.append(((a, b), mult))
    if sum(mult for _, mult in divisor) != det.degree:
        raise QuotfibError(f"det M = {det} does not split into linear factors over F_{q}")
    return divisor


def local_form(form: BinaryForm, point: Point, modulus: int) -> TruncatedPoly:
    """The form in a local coordinate t at the point: x = a + t, y = 1, or x = 1, y = t at (1:0)."""
    field = form.field
    local = ("t",)
    t = MultiPoly.variable("t", local, field)
    one = MultiPoly.constant(1, local, field)
    a, b = point
    if b:
        bindings = {"x": one.scale(a) + t, "y": one}
    else:
        bindings = {"x": one, "y": t}
    poly = form.poly.substitute(bindings)
    return TruncatedPoly.from_values((poly.coefficient((k,)) for k in range(modulus)), modulus, field)


def _local_columns(mat: FormMatrix, point: Point, modulus: int) -> List[ModuleElement]:
    return [
        ModuleElement([local_form(mat.entry(i, j), point, modulus) for i in range(mat.size)])
        for j in range(mat.size)
    ]


def local_cokernel_length(mat: FormMatrix, point: Point, modulus: int = None) -> int:
    """Length of coker(M) at the point: r*N - dim of the t-closure of the local columns."""
    modulus = modulus or mat.profile.det_degree + 1
    image = t_closure(_local_columns(mat, point, modulus))
    return mat.size * modulus - image.dim


def kernel_length(mat: FormMatrix, point: Point, modulus: int = None) -> Optional[int]:
    """
    For 2x2 matrices: kill one row with its cyclic kernel <(-h, e)> and read
    the length off the valuation of the other row on the generator. None when
    neither row has a unit entry at the point.
    """
    if mat.size != 2:
        raise QuotfibError("The cyclic kernel description applies to 2x2 matrices")
    modulus = modulus or mat.profile.det_degree + 1
    rows = [[local_form(mat.entry(i, j), point, modulus) for j in range(2)] for i in range(2)]
    for killed, other in ((1, 0), (0, 1)):
        e, h = rows[killed]
        if e.is_unit() or h.is_unit():
            generator, _ = cyclic_kernel(e, h)
            value = rows[other][0] * generator[0] + rows[other][1] * generator[1]
            return value.valuation()
    return None


def cokernel_divisor(mat: FormMatrix) -> PointDivisor:
    """Points of P^1(F_q) where coker(M) is supported, with local lengths."""
    q = _require_prime_field(mat)
    pair_invariant(mat)
    divisor = []
    for point in projective_line(q):
        length = local_cokernel_length(mat, point)
        if length:
            divisor.append((point, length))
    logger.debug(f"coker divisor of {mat}: {divisor}")
    return divisor


def kernel_consistency(mat: FormMatrix) -> bool:
    """det divisor == cokernel divisor, and the cyclic-kernel lengths agree wherever they apply."""
    det_side = det_divisor(mat)
    coker_side = cokernel_divisor(mat)
    if det_side != coker_side:
        logger.warning(f"{mat}: det divisor {det_side} != cokernel divisor {coker_side}")
        return False
    if mat.size == 2:
        for point, length in det_side:
            via_kernel = kernel_length(mat, point)
            if via_kernel is not None and via_kernel != length:
                logger.warning(f"{mat}: cyclic kernel gives length {via_kernel} at {point}, expected {length}")
                return False
    return True
