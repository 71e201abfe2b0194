"""Exact computations in the two-letter q-shuffle algebra.

Catalan elements, the images of Damiani's PBW elements under the embedding
A -> x, B -> y, and exact verification of the identities relating them.
"""
from .catalan import (
    CatalanFamily,
    catalan_element,
    cw_elevation,
    cw_profile,
    elevation,
    enumerate_catalan,
    is_balanced,
    is_catalan,
    profile,
    profile_halflength,
    profile_summation_check,
    profile_to_word,
)
from .errors import (
    DegenerateEvaluation,
    InvalidProfile,
    InvalidWord,
    NonExactDivision,
    NotBalanced,
    NotCatalan,
    ZeroEvaluationPoint,
)
from .freealg import Element, bidegree, coeff, concat, parse_word, weight, zeta
from .laurent import LaurentPoly, eval_rational, exact_div, q, qfact, qint
from .pbw import (
    PBWLabel,
    independence_evidence,
    pbw_image_closed,
    pbw_image_recursive,
    pbw_monomials,
    verify_main_theorem,
)
from .relations import (
    VerifyConfig,
    verify_all,
    verify_aver,
    verify_balanced_lemma,
    verify_catalan_support,
    verify_commutation,
    verify_relation_corollaries,
)
from .report import SuiteReport, VerificationReport
# the product is exported as ``star`` so that ``qshuffle.shuffle`` stays the submodule
from .shuffle import qserre_check, shuffle_letter, shuffle_many, star

__version__ = "0.1.0"

__all__ = [
    "bidegree",
    "catalan_element",
    "CatalanFamily",
    "coeff",
    "concat",
    "cw_elevation",
    "cw_profile",
    "DegenerateEvaluation",
    "Element",
    "elevation",
    "enumerate_catalan",
    "eval_rational",
    "exact_div",
    "independence_evidence",
    "InvalidProfile",
    "InvalidWord",
    "is_balanced",
    "is_catalan",
    "LaurentPoly",
    "NonExactDivision",
    "NotBalanced",
    "NotCatalan",
    "parse_word",
    "pbw_image_closed",
    "pbw_image_recursive",
    "pbw_monomials",
    "PBWLabel",
    "profile",
    "profile_halflength",
    "profile_summation_check",
    "profile_to_word",
    "q",
    "qfact",
    "qint",
    "qserre_check",
    "shuffle_letter",
    "shuffle_many",
    "star",
    "SuiteReport",
    "VerificationReport",
    "verify_all",
    "verify_aver",
    "verify_balanced_lemma",
    "verify_catalan_support",
    "verify_commutation",
    "verify_main_theorem",
    "verify_relation_corollaries",
    "VerifyConfig",
    "weight",
    "ZeroEvaluationPoint",
    "zeta",
]
