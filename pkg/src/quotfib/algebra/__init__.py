# quotfib/algebra/__init__.py
"""
Exact Algebra
=============

Exact scalars, truncated polynomial rings k[t]/<t^n>, sparse multivariate
polynomials and the expression parser. Every other quotfib layer builds on
these types.

Public API:
    Fields and Scalars:
        - FieldDescriptor, rationals(), prime_field(p), parse_field(text)
        - Scalar: exact element of QQ or GF(p)

    Truncated Polynomials:
        - TruncatedPoly, trunc_mul, trunc_invert

    Multivariate Polynomials:
        - MultiPoly: sparse polynomial over an ordered variable context
        - BinaryForm: homogeneous form in (x, y) with an explicit degree
        - substitute, exact_divide, multiplicity_along, partial_derivative

    Parsing:
        - parse_poly(text, vars, field)

Example Usage:
    ```python
    from quotfib.algebra import parse_poly, rationals

    p = parse_poly("a^3 - g*(b - a*c)", ("a", "b", "c", "g"), rationals())
    print(p.partial_derivative("a"))   # 3*a^2 + c*g
    ```
"""

from .scalars import FieldDescriptor, FieldKind, Scalar, ScalarLike, is_prime, parse_field, prime_field, rationals
from .truncated import TruncatedPoly, trunc_invert, trunc_mul
from .polynomials import (
    FORM_VARS,
    BinaryForm,
    MultiPoly,
    exact_divide,
    grlex_key,
    multiplicity_along,
    partial_derivative,
    substitute,
)
from .parser import parse_poly, split_top_level, tokenize

__all__ = [
    # Fields and Scalars
    "FieldDescriptor",
    "FieldKind",
    "Scalar",
    "ScalarLike",
    "is_prime",
    "parse_field",
    "prime_field",
    "rationals",

    # Truncated Polynomials
    "TruncatedPoly",
    "trunc_mul",
    "trunc_invert",

    # Multivariate Polynomials
    "MultiPoly",
    "BinaryForm",
    "FORM_VARS",
    "grlex_key",
    "substitute",
    "exact_divide",
    "multiplicity_along",
    "partial_derivative",

    # Parsing
    "parse_poly",
    "split_top_level",
    "tokenize",
]
