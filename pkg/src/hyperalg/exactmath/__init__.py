"""Exact computational kernel: integer/prime-field polynomials, resultants,
factorization, real root isolation and algebraic sign evaluation."""

from .algebraic import (
    AlgebraicReal,
    isolate_real_roots,
    refine_to_select,
    sign_at,
)
from .factorization import (
    berlekamp_factor_squarefree,
    factor_fp,
    factor_q,
    is_irreducible_q,
    zassenhaus_squarefree,
)
from .gfpoly import GF, FpPoly, find_irreducible, fp_gcd, is_irreducible, is_prime, next_prime
from .poly import (
    IntPoly,
    count_real_roots,
    is_squarefree,
    poly_gcd,
    product_combination_poly,
    resultant,
    resultant_bivariate,
    resultant_sylvester,
    root_bound,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
    sturm_variations,
    sum_combination_poly,
    sylvester_matrix,
    bareiss_determinant,
)

__all__ = [
    "AlgebraicReal",
    "FpPoly",
    "GF",
    "IntPoly",
    "bareiss_determinant",
    "berlekamp_factor_squarefree",
    "count_real_roots",
    "factor_fp",
    "factor_q",
    "find_irreducible",
    "fp_gcd",
    "is_irreducible",
    "is_irreducible_q",
    "is_prime",
    "is_squarefree",
    "isolate_real_roots",
    "next_prime",
    "poly_gcd",
    "product_combination_poly",
    "refine_to_select",
    "resultant",
    "resultant_bivariate",
    "resultant_sylvester",
    "root_bound",
    "sign_at",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_chain",
    "sturm_variations",
    "sum_combination_poly",
    "sylvester_matrix",
    "zassenhaus_squarefree",
]
