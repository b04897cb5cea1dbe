"""Exact Chow and augmented Chow polynomials of graded posets, the descent
polynomial family behind their interlacing, and checkers for both."""
from .chow import ChowResult, analyze, aug_chow_poly, chow_poly, flag_beta_via_h, gamma_chow_via_p
from .classical import binomial_eulerian, eulerian, gamma_binomial_eulerian, gamma_eulerian, verify_decomposition
from .descent import (
    PKey, build_diagram, isolated_subsets, p_bruteforce, p_recursive,
    verify_five_conditions, verify_general_diagram, verify_interlacing_diagram,
)
from .polynomial import IntPoly, gamma_contract, gamma_expand, interlaces, isolate_roots, real_rooted
from .poset import (
    GradedPoset, add_top, boolean_lattice, dual, f_vector, face_poset, flag_alpha, flag_beta,
    h_vector, is_simplicial, random_pure_complex, uniform_flats, validate,
)

__version__ = "0.1.0"

__all__ = [
    "ChowResult",
    "analyze",
    "aug_chow_poly",
    "chow_poly",
    "flag_beta_via_h",
    "gamma_chow_via_p",
    "binomial_eulerian",
    "eulerian",
    "gamma_binomial_eulerian",
    "gamma_eulerian",
    "verify_decomposition",
    "PKey",
    "build_diagram",
    "isolated_subsets",
    "p_bruteforce",
    "p_recursive",
    "verify_five_conditions",
    "verify_general_diagram",
    "verify_interlacing_diagram",
    "IntPoly",
    "gamma_contract",
    "gamma_expand",
    "interlaces",
    "isolate_roots",
    "real_rooted",
    "GradedPoset",
    "add_top",
    "boolean_lattice",
    "dual",
    "f_vector",
    "face_poset",
    "flag_alpha",
    "flag_beta",
    "h_vector",
    "is_simplicial",
    "random_pure_complex",
    "uniform_flats",
    "validate",
]
