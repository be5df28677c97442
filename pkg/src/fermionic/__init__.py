"""Exact computations in the exterior algebra on theta_1..theta_n, xi_1..xi_n and its
fermionic diagonal coinvariant quotients."""

from .exterior import (Element, Monomial, casimir, casimir_power, from_json, multiply,
                       paired_basis_monomial, parse_text, theta, to_json, to_text,
                       v_basis_monomial, xi)
from .linalg import ExactMatrix, determinant, rank, rref
from .paths import Family, Path, Step, compare, enumerate_paths, from_path, to_path
from .qt import QTPolynomial, qt_analog
from .coinvariants import (closed_form_dimension, hilbert_series, permutation, quotient_dimension,
                           reflection)
from .lefschetz import certify_lefschetz, check_boolean_hlp, delta_power_matrix, incidence_matrix
from .standard import basis_theorem_check, standard_monomials

__version__ = "0.1.0"

__all__ = [
    "Element",
    "Monomial",
    "casimir",
    "casimir_power",
    "from_json",
    "multiply",
    "paired_basis_monomial",
    "parse_text",
    "theta",
    "to_json",
    "to_text",
    "v_basis_monomial",
    "xi",
    "ExactMatrix",
    "determinant",
    "rank",
    "rref",
    "Family",
    "Path",
    "Step",
    "compare",
    "enumerate_paths",
    "from_path",
    "to_path",
    "QTPolynomial",
    "qt_analog",
    "closed_form_dimension",
    "hilbert_series",
    "permutation",
    "quotient_dimension",
    "reflection",
    "certify_lefschetz",
    "check_boolean_hlp",
    "delta_power_matrix",
    "incidence_matrix",
    "basis_theorem_check",
    "standard_monomials",
]
