# quotfib/census/enumeration.py
"""
Invariant Subspace Enumeration
==============================
Brute-force enumeration of t-invariant subspaces of (F_q[t]/<t^n>)^r.

Every dim-k subspace of F_q^N (N = nr) has a unique reduced row-echelon
basis, so the Grassmannian is the disjoint union of echelon cells, one per
pivot-column set. Each cell is scanned by filling its free entries and
testing t-invariance row by row with early exit. Candidates stay plain int
tuples; only accepted subspaces become SubmoduleBasis values.

Work is split into shards of (pivot set, free-entry index range) units.
Shards share nothing and merge deterministically.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, islice, product
from math import ceil
from typing import List, NamedTuple, Optional, Sequence, Tuple
import logging
import os
import time

from ..core.errors import BudgetExceededError, QuotfibError
from ..core.settings import enumeration_budget
from ..algebra.scalars import Scalar, is_prime, prime_field
from ..modules.submodules import SubmoduleBasis, classify_type
from .models import CensusReport

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


class WorkUnit(NamedTuple):
    """A slice [start, stop) of the free-entry assignments of one echelon cell."""
    pivots: Tuple[int, ...]
    start: int
    stop: int


# ================================================================== Sizes

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    numerator = denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def free_positions(pivots: Sequence[int], ncols: int) -> List[Tuple[int, int]]:
    """(row, column) entries left free in the echelon cell of the given pivots."""
    pivot_set = set(pivots)
    return [(i, col) for i, p in enumerate(pivots) for col in range(p + 1, ncols) if col not in pivot_set]


def cell_size(pivots: Sequence[int], ncols: int, q: int) -> int:
    return q ** len(free_positions(pivots, ncols))


def _validate(n: int, r: int, q: int, dim: int):
    if not is_prime(q):
        raise QuotfibError(f"q = {q} is not prime")
    if n < 0 or r < 1:
        raise QuotfibError(f"Need n >= 0 and r >= 1, got n={n}, r={r}")
    if dim < 0 or dim > n * r:
        raise QuotfibError(f"dim = {dim} out of range for an {n * r}-dimensional space")


def plan_shards(n: int, r: int, q: int, dim: int, shards: int = 1,
                budget: Optional[int] = None) -> List[List[WorkUnit]]:
    """
    Split the echelon cells of Gr(dim, nr) over F_q into `shards` units of
    near-equal candidate counts; refuse when a shard would exceed the budget.
    """
    _validate(n, r, q, dim)
    ncols = n * r
    total = gaussian_binomial(ncols, dim, q)
    cap = enumeration_budget(budget)
    shards = max(1, shards)
    per_shard = max(1, ceil(total / shards))
    if per_shard > cap:
        suggested = ceil(total / cap)
        logger.warning(f"Refusing enumeration of {total} candidates with {shards} shard(s); budget {cap}")
        raise BudgetExceededError(total, cap, suggested_shards=suggested)

    plan: List[List[WorkUnit]] = [[]]
    room = per_shard
    for pivots in combinations(range(ncols), dim):
        size = cell_size(pivots, ncols, q)
        start = 0
        while start < size:
            if room == 0:
                plan.append([])
                room = per_shard
            take = min(room, size - start)
            plan[-1].append(WorkUnit(pivots, start, start + take))
            start += take
            room -= take
    logger.debug(f"Planned {total} candidates into {len(plan)} shard(s)")
    return plan


# ================================================================== Scanning

def _shift(row: Sequence[int], n: int, r: int) -> List[int]:
    shifted = []
    for j in range(r):
        shifted.append(0)
        shifted.extend(row[j * n:j * n + n - 1])
    return shifted


def _is_invariant(rows: Sequence[Sequence[int]], pivots: Sequence[int], n: int, r: int, q: int) -> bool:
    """Rows are in reduced echelon form; test t * row in span, stopping at the first failure."""
    for row in rows:
        remainder = _shift(row, n, r)
        for basis_row, col in zip(rows, pivots):
            factor = remainder[col]
            if factor:
                remainder = [(x - factor * y) % q for x, y in zip(remainder, basis_row)]
        if any(remainder):
            return False
    return True


def _cell_rows(pivots: Sequence[int], ncols: int, free: Sequence[Tuple[int, int]], values: Sequence[int]) -> IntMatrix:
    rows = [[0] * ncols for _ in pivots]
    for i, p in enumerate(pivots):
        rows[i][p] = 1
    for (i, col), value in zip(free, values):
        rows[i][col] = value
    return tuple(tuple(row) for row in rows)


def scan_units(units: Sequence[WorkUnit], n: int, r: int, q: int) -> Tuple[List[IntMatrix], int]:
    """Accepted echelon matrices of the given work units, and the number of candidates scanned."""
    ncols = n * r
    accepted: List[IntMatrix] = []
    scanned = 0
    for unit in units:
        free = free_positions(unit.pivots, ncols)
        assignments = islice(product(range(q), repeat=len(free)), unit.start, unit.stop)
        for values in assignments:
            scanned += 1
            rows = _cell_rows(unit.pivots, ncols, free, values)
            if _is_invariant(rows, unit.pivots, n, r, q):
                accepted.append(rows)
    return accepted, scanned


def _to_basis(matrix: IntMatrix, n: int, r: int, q: int) -> SubmoduleBasis:
    field = prime_field(q)
    rows = [tuple(Scalar._raw(x, field) for x in row) for row in matrix]
    pivots = [row.index(1) for row in matrix]
    return SubmoduleBasis._from_reduced(n, r, field, rows, pivots)


def _run_plan(plan: List[List[WorkUnit]], worker, *args):
    """Run worker over every shard, in processes when there is more than one shard."""
    if len(plan) == 1:
        return [worker(plan[0], *args)]
    workers = min(len(plan), os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(worker, shard, *args) for shard in plan]
        return [future.result() for future in futures]


def enumerate_invariant_subspaces(n: int, r: int, q: int, dim: Optional[int] = None, shards: int = 1,
                                  budget: Optional[int] = None) -> List[SubmoduleBasis]:
    """All dim-dimensional t-invariant subspaces (default dim = n), in echelon-cell order."""
    dim = n if dim is None else dim
    plan = plan_shards(n, r, q, dim, shards, budget)
    results = _run_plan(plan, scan_units, n, r, q)
    matrices = [matrix for accepted, _ in results for matrix in accepted]
    logger.info(f"Enumerated {len(matrices)} invariant subspaces of dim {dim} in (F_{q}[t]/t^{n})^{r}")
    return [_to_basis(matrix, n, r, q) for matrix in matrices]


# ================================================================== Census

def census_shard(units: Sequence[WorkUnit], n: int, r: int, q: int) -> CensusReport:
    """Stratified counts of one shard."""
    start = time.perf_counter()
    accepted, scanned = scan_units(units, n, r, q)
    by_type = {}
    for matrix in accepted:
        label = str(classify_type(_to_basis(matrix, n, r, q)))
        by_type[label] = by_type.get(label, 0) + 1
    return CensusReport(
        n=n, r=r, q=q, total=len(accepted), by_type=by_type, candidates=scanned,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def census(n: int, r: int, q: int, shards: int = 1, budget: Optional[int] = None) -> CensusReport:
    """Stratified count of the n-dimensional t-invariant subspaces of (F_q[t]/<t^n>)^r."""
    start = time.perf_counter()
    plan = plan_shards(n, r, q, n, shards, budget)
    logger.info(f"Census (n={n}, r={r}, q={q}) over {len(plan)} shard(s)")
    reports = _run_plan(plan, census_shard, n, r, q)
    report = CensusReport.merge(reports, elapsed_ms=(time.perf_counter() - start) * 1000)
    logger.info(f"Census (n={n}, r={r}, q={q}): total {report.total}, by type {report.by_type}")
    return report
