# quotfib/pairs/invariants.py
"""
Pair Invariants
===============
The invariant M -> (det M, beta_M) of a stable form matrix under Aut(E).

det M is taken up to scalars (normalized to graded-lex leading coefficient 1)
and beta_M is the row span of the lower block, recorded by its reduced row
echelon form: for E = O^(r-1) + O(n) this is an (r-1)-plane in k^r, for
E = O(1) + O(2) it is the point [beta_1 : beta_2] of P^3 in coefficient
coordinates.
"""

from typing import List, Optional, Tuple
import logging

from pydantic import BaseModel, Field

from ..core.errors import NotStablePairError, ShapeMismatchError
from ..algebra.polynomials import BinaryForm
from ..algebra.scalars import Scalar
from ..modules.linalg import rref
from .forms import DegreeProfile, FormMatrix, PairShape

logger = logging.getLogger(__name__)


class PairInvariant(BaseModel):
    """(det class, beta class) of a stable pair."""
    shape: Optional[PairShape] = Field(None, description="Splitting type, when it is a named one")
    det_class: BinaryForm = Field(..., description="Determinant with leading coefficient 1")
    beta_class: Tuple[Tuple[Scalar, ...], ...] = Field(..., description="RREF of the beta block")

    model_config = {
        "frozen": True,
        "arbitrary_types_allowed": True,
        "use_enum_values": True,
    }

    def beta_text(self) -> str:
        rows = ["[" + ":".join(str(c) for c in row) + "]" for row in self.beta_class]
        return rows[0] if len(rows) == 1 else "{" + ", ".join(rows) + "}"

    def to_report(self) -> dict:
        return {"det": str(self.det_class), "beta": self.beta_text()}

    def __str__(self) -> str:
        return f"(det = {self.det_class}, beta = {self.beta_text()})"


def _beta_echelon(mat: FormMatrix) -> Tuple[List[Tuple[Scalar, ...]], List[int]]:
    block = mat.lower_block()
    echelon, pivots = rref(block, mat.field, len(block[0]))
    if len(pivots) < len(block):
        raise NotStablePairError(
            f"beta block of {mat} has rank {len(pivots)}, needs {len(block)}"
        )
    return echelon, pivots


def pair_invariant(mat: FormMatrix) -> PairInvariant:
    """(det M up to scale, beta_M); NotStablePairError for a rank-deficient beta block or det M = 0."""
    echelon, _ = _beta_echelon(mat)
    det = mat.determinant()
    if det.is_zero():
        raise NotStablePairError(f"det of {mat} vanishes: not a stable pair")
    return PairInvariant(
        shape=mat.profile.shape,
        det_class=det.normalized(),
        beta_class=tuple(tuple(row) for row in echelon),
    )


def deg3_invariant(mat: FormMatrix) -> PairInvariant:
    """(det M, [beta_1 : beta_2]) for E = O(1) + O(2)."""
    if mat.profile != DegreeProfile.deg3():
        raise ShapeMismatchError(f"Expected degrees (2; 1), got {mat.profile}")
    return pair_invariant(mat)


def edge_normal_form(mat: FormMatrix, r: int = None, n: int = None) -> Tuple[FormMatrix, PairInvariant]:
    """
    Canonical representative of the Aut(E)-orbit for E = O^(r-1) + O(n).

    gamma_2 brings the beta block to reduced row echelon form (identity on
    the leftmost independent columns), phi clears alpha on those pivot
    columns and gamma_1 makes the one remaining alpha monic.
    """
    profile = mat.profile
    if profile.shape != PairShape.EDGE:
        raise ShapeMismatchError(f"Edge normal forms need degrees (n; 0, ..., 0), got {profile}")
    if r is not None and r != mat.size:
        raise ShapeMismatchError(f"Matrix has rank {mat.size}, expected r = {r}")
    if n is not None and n != profile.top:
        raise ShapeMismatchError(f"Top row has degree {profile.top}, expected n = {n}")

    invariant = pair_invariant(mat)
    echelon = invariant.beta_class
    pivots = [next(j for j, c in enumerate(row) if not c.is_zero()) for row in echelon]
    free = next(j for j in range(mat.size) if j not in pivots)

    # phi_j = -alpha_{pivot_j} clears the pivot columns
    alpha = list(mat.rows[0])
    reduced = alpha[free]
    for row, pivot in zip(echelon, pivots):
        reduced = reduced - alpha[pivot] * row[free]
    reduced = reduced.normalized()

    field = mat.field
    top = [BinaryForm.zero(profile.top, field) for _ in range(mat.size)]
    top[free] = reduced
    lower = [[BinaryForm.from_coefficients([c], field) for c in row] for row in echelon]
    normal = FormMatrix([top] + lower, profile)
    logger.debug(f"edge normal form of {mat}: {normal}")
    return normal, invariant


def equivalent(a: FormMatrix, b: FormMatrix) -> bool:
    """Whether two stable matrices of one profile have the same invariant."""
    if a.profile != b.profile or a.field != b.field:
        raise ShapeMismatchError(f"Cannot compare {a.profile} over {a.field} with {b.profile} over {b.field}")
    return pair_invariant(a) == pair_invariant(b)
