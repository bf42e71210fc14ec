# quotfib/pairs/__init__.py
"""
Stable Pairs on P^1
===================

Matrices of binary forms describing stable pairs O^r -> E, their
Aut(E)-invariant (det M, beta_M), normal forms for E = O^(r-1) + O(n), and
desk-scale orbit enumeration over small prime fields.

Public API:
    Matrices:
        - DegreeProfile (edge(r, n), deg3()), FormMatrix, PairShape
        - AutElement, act(element, mat), random_aut_element, random_form_matrix

    Invariants:
        - pair_invariant(mat), deg3_invariant(mat), edge_normal_form(mat, r, n)
        - equivalent(a, b)

    Orbits:
        - compare_partitions(profile, q) -> OrbitComparison

    Cokernels:
        - det_divisor(mat), cokernel_divisor(mat), kernel_consistency(mat)
"""

from .forms import (
    AutElement,
    DegreeProfile,
    FormMatrix,
    PairShape,
    act,
    form_determinant,
    form_from_poly,
    random_aut_element,
    random_form,
    random_form_matrix,
    scalar_form,
)
from .invariants import (
    PairInvariant,
    deg3_invariant,
    edge_normal_form,
    equivalent,
    pair_invariant,
)
from .orbits import (
    OrbitComparison,
    aut_generators,
    compare_partitions,
    int_invariant,
    iter_stable_matrices,
    matrix_of,
    orbit_labels,
    stable_states,
    state_of,
    state_space_size,
)
from .cokernel import (
    cokernel_divisor,
    det_divisor,
    kernel_consistency,
    kernel_length,
    local_cokernel_length,
    local_form,
    projective_line,
)

__all__ = [
    "AutElement",
    "DegreeProfile",
    "FormMatrix",
    "PairShape",
    "act",
    "form_determinant",
    "form_from_poly",
    "random_aut_element",
    "random_form",
    "random_form_matrix",
    "scalar_form",
    "PairInvariant",
    "deg3_invariant",
    "edge_normal_form",
    "equivalent",
    "pair_invariant",
    "OrbitComparison",
    "aut_generators",
    "compare_partitions",
    "int_invariant",
    "iter_stable_matrices",
    "matrix_of",
    "orbit_labels",
    "stable_states",
    "state_of",
    "state_space_size",
    "cokernel_divisor",
    "det_divisor",
    "kernel_consistency",
    "kernel_length",
    "local_cokernel_length",
    "local_form",
    "projective_line",
]
