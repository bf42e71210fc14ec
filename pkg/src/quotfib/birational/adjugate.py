# quotfib/birational/adjugate.py
"""
Adjugate Identity
=================
adj(M) * M = det(M) * I for 2x2 matrices of binary forms, expanded symbolically.
"""

from random import Random
from typing import List, Sequence
import logging

from ..core.errors import ShapeMismatchError
from ..core.models import Verdict, VerdictStatus
from ..algebra.polynomials import BinaryForm, MultiPoly
from ..algebra.scalars import FieldDescriptor

logger = logging.getLogger(__name__)

FormRows = Sequence[Sequence[BinaryForm]]


def _check_square(mat: FormRows):
    if len(mat) != 2 or any(len(row) != 2 for row in mat):
        raise ShapeMismatchError("The adjugate check takes 2x2 matrices")


def determinant(mat: FormRows) -> BinaryForm:
    """a*d - b*c; ShapeMismatchError when the two products have different degrees."""
    _check_square(mat)
    (a, b), (c, d) = mat
    if a.degree + d.degree != b.degree + c.degree:
        raise ShapeMismatchError(
            f"Determinant is not homogeneous: degrees {a.degree + d.degree} and {b.degree + c.degree}"
        )
    return a * d - b * c


def adjugate(mat: FormRows) -> List[List[BinaryForm]]:
    _check_square(mat)
    (a, b), (c, d) = mat
    return [[d, -b], [-c, a]]


def adjugate_compose_check(mat: FormRows) -> Verdict:
    """PASS iff adj(mat) * mat equals det(mat) on the diagonal and 0 off it."""
    det = determinant(mat)
    adj = adjugate(mat)
    product = [[adj[i][0] * mat[0][j] + adj[i][1] * mat[1][j] for j in range(2)] for i in range(2)]
    zero = MultiPoly.zero(det.poly.vars, det.field)
    ok = all(
        product[i][j].poly == (det.poly if i == j else zero)
        for i in range(2) for j in range(2)
    )
    observed = "[" + "; ".join(", ".join(str(entry) for entry in row) for row in product) + "]"
    if not ok:
        logger.warning(f"adj(M)*M = {observed} differs from det(M)*I with det = {det}")
    return Verdict(
        name="adj(M)*M = det(M)*I",
        status=VerdictStatus.PASS if ok else VerdictStatus.FAIL,
        expected=f"[{det}, 0; 0, {det}]",
        observed=observed,
        message=None if ok else "adjugate product differs from det*I",
    )


def random_form(degree: int, field: FieldDescriptor, rng: Random) -> BinaryForm:
    """Uniform random coefficients from the prime field (small integers over QQ)."""
    order = field.order if field.is_prime_field else 7
    return BinaryForm.from_coefficients([rng.randrange(order) for _ in range(degree + 1)], field)


def random_form_matrix(row_degrees: Sequence[int], field: FieldDescriptor, rng: Random) -> List[List[BinaryForm]]:
    """2x2 matrix whose row i holds forms of degree row_degrees[i]."""
    return [[random_form(degree, field, rng) for _ in range(2)] for degree in row_degrees]
