# quotfib/census/counting.py
"""
Closed-Form Counts
==================
Point counts predicted by the stratification of the invariant-subspace
variety Q_n (rank 2): each stratum of type (n-m, m) with n > 2m is an
A^(n-2m-1)-bundle over P^1, the stratum n = 2m is a single point, and the
singular locus of Q_n is a copy of Q_(n-2). Also the quadric cone
xz + y^2 = 0 in P^3, whose point count matches Q_2.
"""

from itertools import product
from typing import Iterator, List, Tuple
import logging

from ..core.errors import QuotfibError
from ..algebra.scalars import Scalar, is_prime
from ..modules.submodules import ModuleType
from .models import QuadricDecomposition, StratumDimensionTable, StratumEntry

logger = logging.getLogger(__name__)


def closed_form_count(n: int, q: int) -> int:
    """|Q_0| = 1, |Q_1| = q+1, |Q_n| = (q+1) q^(n-1) + |Q_(n-2)|."""
    if n < 0:
        raise QuotfibError(f"n must be non-negative, got {n}")
    counts = [1, q + 1]
    for k in range(2, n + 1):
        counts.append((q + 1) * q ** (k - 1) + counts[k - 2])
    return counts[n]


def stratum_count(n: int, m: int, q: int) -> int:
    """F_q-points of the stratum of type (n-m, m)."""
    if m < 0 or 2 * m > n:
        raise QuotfibError(f"Stratum index m={m} out of range 0..{n // 2}")
    if n == 2 * m:
        return 1
    return (q + 1) * q ** (n - 2 * m - 1)


# ================================================================== Quadric cone

def projective_points(dimension: int, q: int) -> Iterator[Tuple[int, ...]]:
    """Normalized representatives of P^dimension(F_q): first nonzero coordinate 1."""
    for lead in range(dimension + 1):
        for tail in product(range(q), repeat=dimension - lead):
            yield (0,) * lead + (1,) + tail


def _on_cone(point: Tuple[int, ...], q: int) -> bool:
    x, y, z, _ = point
    return (x * z + y * y) % q == 0


def quadric_cone_count(q: int) -> int:
    """Number of F_q-points of V(xz + y^2) in P^3."""
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    return sum(1 for point in projective_points(3, q) if _on_cone(point, q))


def quadric_cone_decomposition(q: int) -> QuadricDecomposition:
    """
    Cone points by chart: x != 0 gives (1 : y : -y^2 : u), z != 0 gives
    (-y^2 : -y : 1 : u); the two overlap where y != 0 and the remaining point
    is the vertex (0 : 0 : 0 : 1).
    """
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    points = [point for point in projective_points(3, q) if _on_cone(point, q)]
    return QuadricDecomposition(
        q=q,
        chart_x=sum(1 for x, _, _, _ in points if x),
        chart_z=sum(1 for _, _, z, _ in points if z),
        overlap=sum(1 for x, _, z, _ in points if x and z),
        singular=sum(1 for x, _, z, _ in points if not x and not z),
        total=len(points),
    )


def quadric_chart_transition(y, u) -> Tuple[Scalar, Scalar]:
    """Change of coordinates from the x-chart to the z-chart: (y, u) -> (1/y, -u/y^2)."""
    if not isinstance(y, Scalar):
        raise QuotfibError("Quadric chart coordinates must be Scalars")
    if y.is_zero():
        raise QuotfibError("y = 0 lies outside the overlap of the two charts")
    u = y.field(u)
    return y.inverse(), -u / (y * y)


# ================================================================== Stratum dimensions

def iter_partitions(n: int, max_parts: int, largest: int = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n with at most max_parts parts, in decreasing lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in iter_partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def strata_dimension_table(r: int, n: int) -> StratumDimensionTable:
    """
    Rank 2: every stratum (n-m, m) with its dimension n-2m. Higher rank:
    only the open stratum S1 of type (n) and the stratum S2 of type (n-1, 1)
    have known dimensions n(r-1) and n(r-1)-2.
    """
    if r < 2 or n < 1:
        raise QuotfibError(f"Need r >= 2 and n >= 1, got r={r}, n={n}")

    entries: List[StratumEntry] = []
    if r == 2:
        for m in range(n // 2 + 1):
            module_type = ModuleType.of(*(part for part in (n - m, m) if part))
            if n == 2 * m:
                description = "single point"
            else:
                description = f"A^{n - 2 * m - 1}-bundle over P^1"
            entries.append(StratumEntry(module_type=module_type, dimension=n - 2 * m, description=description))
    else:
        for partition in iter_partitions(n, r):
            module_type = ModuleType(partition=partition)
            if partition == (n,):
                entries.append(StratumEntry(module_type=module_type, dimension=n * (r - 1),
                                            description="S1: smooth open stratum"))
            elif n >= 2 and partition == (n - 1, 1):
                entries.append(StratumEntry(module_type=module_type, dimension=n * (r - 1) - 2,
                                            description="S2: smooth locally closed stratum"))
            else:
                entries.append(StratumEntry(module_type=module_type, dimension=None, description="unknown"))
    return StratumDimensionTable(r=r, n=n, entries=entries)
