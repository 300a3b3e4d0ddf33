"""Exact arithmetic substrate: rationals, polynomials, determinants."""

from .matrix import PolyMatrix, bareiss_determinant, cofactor_determinant, exact_divide
from .multipoly import A_GENERATORS, MultiPoly, RationalFunction, form_generators
from .rational import Rational, cmp, format_rational, parse_rational, sign, to_rational
from .unipoly import (
    UniPoly,
    discriminant,
    sign_variations,
    sturm_chain,
    sturm_count_real_roots,
    sylvester_matrix,
    sylvester_resultant,
)

__all__ = [
    "A_GENERATORS", "MultiPoly", "PolyMatrix", "Rational", "RationalFunction", "UniPoly",
    "bareiss_determinant", "cmp", "cofactor_determinant", "discriminant", "exact_divide",
    "form_generators", "format_rational", "parse_rational", "sign", "sign_variations",
    "sturm_chain", "sturm_count_real_roots", "sylvester_matrix", "sylvester_resultant",
    "to_rational",
]
