"""Exact abelianization invariants of cyclically presented groups, and the
connected-LOG classification of the generalized Fibonacci groups H(r, n, s)."""

from .circulant import (
    AbelianGroup,
    ExponentVector,
    abelian_invariants,
    circulant_det_abs,
    circulant_rank,
    representer_polynomial,
    smith_normal_form,
)
from .cycpres import CyclicWord, HParams, ab_order, abelianization, exponent_vector, h_word
from .hclass import (
    Classification,
    GeneratorBound,
    Reason,
    Verdict,
    d_lower_bound,
    free_product_decomposition,
    h_betti_formula,
    h_classify,
    infinite_by_balanced,
    perfect_necessary,
    two_generator_knot,
)
from .intpoly import IntPolynomial, cyclotomic, has_cyclotomic_factor, poly_gcd, resultant

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "ExponentVector", "abelian_invariants", "circulant_det_abs", "circulant_rank",
    "representer_polynomial", "smith_normal_form", "CyclicWord", "HParams", "ab_order",
    "abelianization", "exponent_vector", "h_word", "Classification", "GeneratorBound", "Reason",
    "Verdict", "d_lower_bound", "free_product_decomposition", "h_betti_formula", "h_classify",
    "infinite_by_balanced", "perfect_necessary", "two_generator_knot", "IntPolynomial",
    "cyclotomic", "has_cyclotomic_factor", "poly_gcd", "resultant",
]
