"""Exact umbral/operator calculus for the lattice Segal-Bargmann transform.

Exact rationals cross the boundary as fractions.Fraction; pass parameters as
Fraction, int, or strings like "3/4" (exact decimals such as "0.25" also work).
"""

from ._core import (
    __version__,
    bargmann_inner,
    char_function,
    coeff_table,
    coeffs,
    coherent_charlier,
    coherent_hermite,
    eval_poly,
    gaussian_inner_product,
    gaussian_moment,
    gaussian_transform_poly,
    inner_product,
    katriel_ok,
    measure_weight,
    nu_sigma_inner,
    poisson_moment,
    stirling_first,
    stirling_second,
    transform_apply,
    transform_poly,
    transform_poly_inverse,
    verify,
    verify_suites,
)

__all__ = [
    "__version__",
    "bargmann_inner",
    "char_function",
    "coeff_table",
    "coeffs",
    "coherent_charlier",
    "coherent_hermite",
    "eval_poly",
    "gaussian_inner_product",
    "gaussian_moment",
    "gaussian_transform_poly",
    "inner_product",
    "katriel_ok",
    "measure_weight",
    "nu_sigma_inner",
    "poisson_moment",
    "stirling_first",
    "stirling_second",
    "transform_apply",
    "transform_poly",
    "transform_poly_inverse",
    "verify",
    "verify_suites",
]
