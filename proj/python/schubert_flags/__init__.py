"""Exact torus-equivariant Schubert calculus for the type-A flag variety.

Structure constants c_uv^w of the double Schubert basis, computed by a
Bruhat-triangular GKM solve over exact integer polynomials, with a duality
pushforward cross-check and Graham positivity verification.
"""

from ._core import (
    NotDivisibleError,
    NotTranslationInvariantError,
    Permutation,
    Polynomial,
    RestrictionVector,
    SchubertTable,
    all_permutations,
    alpha,
    bruhat_leq,
    constant,
    divided_difference,
    duality_constant,
    is_graham_positive,
    pushforward,
    selftest,
    structure_constants,
    t,
    to_alpha,
    verify_positivity,
    x,
)

__all__ = [
    "NotDivisibleError",
    "NotTranslationInvariantError",
    "Permutation",
    "Polynomial",
    "RestrictionVector",
    "SchubertTable",
    "all_permutations",
    "alpha",
    "bruhat_leq",
    "constant",
    "divided_difference",
    "duality_constant",
    "is_graham_positive",
    "pushforward",
    "selftest",
    "structure_constants",
    "t",
    "to_alpha",
    "verify_positivity",
    "x",
]
