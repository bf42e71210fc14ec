# quotfib/modules/__init__.py
"""
Truncated Modules
=================

Submodules of (k[t]/<t^n>)^r as t-invariant subspaces, their module types,
cyclic kernels of torsion quotients and the rank-2 chart coordinates.

Public API:
    - ModuleElement, SubmoduleBasis, ModuleType, ChartCoordinates
    - cyclic_kernel, classify_type, chart_coords, chart_transition
    - t_invariant, membership, t_closure
    - rref, rank, rref_mod_p, rank_mod_p (exact linear algebra)
"""

from .linalg import (
    express_in_basis,
    in_row_space,
    in_row_space_mod_p,
    rank,
    rank_mod_p,
    reduce_vector,
    rref,
    rref_mod_p,
)
from .submodules import (
    ChartCoordinates,
    ModuleElement,
    ModuleType,
    SubmoduleBasis,
    chart_coords,
    chart_transition,
    classify_type,
    cyclic_kernel,
    membership,
    partition_from_dims,
    shift_vector,
    submodule_from_u_coords,
    submodule_from_v_coords,
    t_closure,
    t_invariant,
)

__all__ = [
    "ModuleElement",
    "SubmoduleBasis",
    "ModuleType",
    "ChartCoordinates",
    "cyclic_kernel",
    "classify_type",
    "chart_coords",
    "chart_transition",
    "t_invariant",
    "membership",
    "t_closure",
    "partition_from_dims",
    "shift_vector",
    "submodule_from_u_coords",
    "submodule_from_v_coords",
    "rref",
    "rank",
    "reduce_vector",
    "in_row_space",
    "express_in_basis",
    "rref_mod_p",
    "rank_mod_p",
    "in_row_space_mod_p",
]
