"""Polynomial factorization over F_p and reductions between related problems.

Polynomials are passed as (q, coeffs) with coefficients in ascending order.
"""

from ._fqreduce import (
    FqreduceError,
    carlitz_charpoly,
    factor,
    format_poly,
    frob_minpoly,
    largest_factor_degree,
    parse_poly,
    random_squarefree,
    run_cli,
    smallest_factor_degree,
)

__all__ = [
    "FqreduceError",
    "carlitz_charpoly",
    "factor",
    "format_poly",
    "frob_minpoly",
    "largest_factor_degree",
    "parse_poly",
    "random_squarefree",
    "run_cli",
    "smallest_factor_degree",
]
