# quotfib/modules/linalg.py
"""
Exact Linear Algebra
====================
Row reduction, rank and row-space membership over a FieldDescriptor's field,
plus integer-only variants over GF(p) used by the brute-force enumerators.

Matrices are lists of rows; rows are sequences of Scalars (or ints mod p for
the *_mod_p functions). Reduced row-echelon form is the canonical
representative of a row space.
"""

from typing import List, Sequence, Tuple
import logging

from ..algebra.scalars import FieldDescriptor, Scalar

logger = logging.getLogger(__name__)

Row = Tuple[Scalar, ...]


# ================================================================== Exact (Scalar) matrices

def rref(rows: Sequence[Sequence[Scalar]], field: FieldDescriptor, ncols: int = None) -> Tuple[List[Row], List[int]]:
    """
    Reduced row-echelon form of the row space.
    Returns (nonzero rows, pivot columns); zero rows are dropped.
    """
    matrix = [[field(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(matrix)) if not matrix[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = matrix[rank][col].inverse()
        matrix[rank] = [inv * x for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and not matrix[i][col].is_zero():
                factor = matrix[i][col]
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return [tuple(row) for row in matrix[:rank]], pivots


def rank(rows: Sequence[Sequence[Scalar]], field: FieldDescriptor, ncols: int = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, field, ncols)[1])


def reduce_vector(vector: Sequence[Scalar], echelon: Sequence[Row], pivots: Sequence[int]) -> List[Scalar]:
    """Remainder of vector against rows already in reduced row-echelon form."""
    remainder = list(vector)
    for row, col in zip(echelon, pivots):
        factor = remainder[col]
        if not factor.is_zero():
            remainder = [x - factor * y for x, y in zip(remainder, row)]
    return remainder


def in_row_space(vector: Sequence[Scalar], echelon: Sequence[Row], pivots: Sequence[int]) -> bool:
    return all(x.is_zero() for x in reduce_vector(vector, echelon, pivots))


def express_in_basis(vector: Sequence[Scalar], echelon: Sequence[Row], pivots: Sequence[int]) -> List[Scalar]:
    """
    Coefficients c with vector == sum c_i * echelon[i]; for reduced rows these
    are just the vector's entries at the pivot columns. Caller ensures membership.
    """
    return [vector[col] for col in pivots]


# ================================================================== Integer matrices over GF(p)

def rref_mod_p(rows: Sequence[Sequence[int]], p: int, ncols: int = None) -> Tuple[List[Tuple[int, ...]], List[int]]:
    """rref over GF(p) on plain ints in [0, p)."""
    matrix = [[x % p for x in row] for row in rows]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = pow(matrix[rank][col], -1, p)
        matrix[rank] = [(inv * x) % p for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col]:
                factor = matrix[i][col]
                matrix[i] = [(x - factor * y) % p for x, y in zip(matrix[i], matrix[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return [tuple(row) for row in matrix[:rank]], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], p: int, ncols: int = None) -> int:
    if not rows:
        return 0
    return len(rref_mod_p(rows, p, ncols)[1])


def in_row_space_mod_p(vector: Sequence[int], echelon: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> bool:
    """Membership test against rows already in reduced row-echelon form."""
    remainder = list(vector)
    for row, col in zip(echelon, pivots):
        factor = remainder[col] % p
        if factor:
            remainder = [(x - factor * y) % p for x, y in zip(remainder, row)]
    return not any(x % p for x in remainder)
