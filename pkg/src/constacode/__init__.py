"""Constacyclic codes over F_2^m + uF_2^m and their binary Gray images.

The ring R = F_2^m + uF_2^m (u^2 = 0) carries codes that are invariant
under the constacyclic shift by the unit 1 + u.  The Gray map sends
them to binary quasi-cyclic codes of length 2mn, and dual-containing
codes yield CSS quantum codes.  This package builds such codes from
factorizations of x^n - 1, computes their parameters, and searches for
minimum distances.
"""

from .analysis import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    DistanceReport,
    QuantumParams,
    css_params,
    min_distance_exact,
    min_distance_upper_bound,
    min_lee_distance_exact,
    warm_search_kernel,
)
from .codes import (
    BinaryCode,
    ConstaCode,
    build_code,
    cardinality,
    contains,
    dual,
    from_descriptor,
    generator_matrix_gray,
    is_dual_containing,
    r_basis_words,
    to_descriptor,
)
from .errors import (
    BadBlocking,
    BadFactorization,
    ConstacodeError,
    DivisionByZero,
    DivisionByZeroPoly,
    EvenLength,
    EvenLengthUnsupported,
    LengthMismatch,
    NonUnitConstantTerm,
    NonUnitLeadingCoeff,
    NotAFactor,
    NotAUnit,
    NotCoprime,
    NotDualContaining,
    NotFound,
    NotMonic,
    RankMismatch,
    TooLarge,
    ZeroCode,
)
from .gf2m import (
    MODULI,
    TraceOrthogonalBasis,
    coords,
    field_inv,
    field_mul,
    field_text,
    find_tob,
    from_coords,
    trace,
)
from .graymap import (
    check_commuting_mu,
    check_commuting_nu,
    lee_distance,
    lee_weight,
    mu_bar,
    nechaev_permutation,
    nu_shift,
    phi,
    sigma_m_shift,
    sigma_shift,
    word_lee_weight,
)
from .poly import (
    coprime_mod_u,
    divides,
    factor_xn_minus_1,
    mu_lift,
    poly_divmod,
    poly_from_text,
    poly_to_text,
    reciprocal,
    xn_minus_lambda,
)
from .ring import LAMBDA, is_unit, lambda_unit, r_add, r_inv, r_mul, r_text

__version__ = "0.1.0"

__all__ = [
    "BadBlocking",
    "BadFactorization",
    "BinaryCode",
    "ConstaCode",
    "ConstacodeError",
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
    "DistanceReport",
    "DivisionByZero",
    "DivisionByZeroPoly",
    "EvenLength",
    "EvenLengthUnsupported",
    "LAMBDA",
    "LengthMismatch",
    "MODULI",
    "NonUnitConstantTerm",
    "NonUnitLeadingCoeff",
    "NotAFactor",
    "NotAUnit",
    "NotCoprime",
    "NotDualContaining",
    "NotFound",
    "NotMonic",
    "QuantumParams",
    "RankMismatch",
    "TooLarge",
    "TraceOrthogonalBasis",
    "ZeroCode",
    "build_code",
    "cardinality",
    "check_commuting_mu",
    "check_commuting_nu",
    "contains",
    "coords",
    "coprime_mod_u",
    "css_params",
    "divides",
    "dual",
    "factor_xn_minus_1",
    "field_inv",
    "field_mul",
    "field_text",
    "find_tob",
    "from_coords",
    "from_descriptor",
    "generator_matrix_gray",
    "is_dual_containing",
    "is_unit",
    "lambda_unit",
    "lee_distance",
    "lee_weight",
    "min_distance_exact",
    "min_distance_upper_bound",
    "min_lee_distance_exact",
    "mu_bar",
    "mu_lift",
    "nechaev_permutation",
    "nu_shift",
    "phi",
    "poly_divmod",
    "poly_from_text",
    "poly_to_text",
    "r_add",
    "r_basis_words",
    "r_inv",
    "r_mul",
    "r_text",
    "reciprocal",
    "sigma_m_shift",
    "sigma_shift",
    "to_descriptor",
    "trace",
    "warm_search_kernel",
    "word_lee_weight",
    "xn_minus_lambda",
]
