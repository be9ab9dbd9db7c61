"""Exact verification of quadratic reciprocity through finite abelian group identities.

The library computes 2-ranks and two-torsion of explicit cyclic products,
quotient ranks by closed form and by enumeration, Legendre symbols by two
independent routes, and the coordinatewise product of the canonical coset
representatives of {(1,1), (-1,-1)} inside F_p^x x F_q^x, cross-checking
everything against independently computed symbols.
"""

__version__ = "0.1.0"

from .abelian_core import (
    AbelianGroup,
    GroupElement,
    Rank2Result,
    add,
    element_order,
    rank2,
    sum_all_elements,
    two_torsion_subgroup,
)
from .errors import (
    CapacityError,
    DomainError,
    GroupMismatchError,
    InternalCheckError,
    ReciproError,
)
from .quotient_rank import (
    DiagonalGamma,
    QuotientRankReport,
    corollary_rank_for_primes,
    quotient_rank_report,
    rank2_quotient_enumerated,
    rank2_quotient_formula,
)
from .reciprocity_pipeline import (
    RELATION_EQUAL,
    RELATION_OPPOSITE,
    GammaPQ,
    PairVerdict,
    Transversal,
    UnitPair,
    build_transversal,
    closed_form_product,
    predicted_symbol_relation,
    product_over_transversal,
    qr_identity,
    verify_pair,
    verify_transversal,
)
from .residue_arith import (
    euler_criterion_check,
    factorial_mod,
    first_odd_primes,
    is_prime,
    legendre_euler,
    legendre_oracle,
    odd_primes_up_to,
    pow_mod,
    primes_up_to,
    validate_odd_prime,
    wilson_check,
)

__all__ = [
    "AbelianGroup",
    "CapacityError",
    "DiagonalGamma",
    "DomainError",
    "GammaPQ",
    "GroupElement",
    "GroupMismatchError",
    "InternalCheckError",
    "PairVerdict",
    "QuotientRankReport",
    "RELATION_EQUAL",
    "RELATION_OPPOSITE",
    "Rank2Result",
    "ReciproError",
    "Transversal",
    "UnitPair",
    "add",
    "build_transversal",
    "closed_form_product",
    "corollary_rank_for_primes",
    "element_order",
    "euler_criterion_check",
    "factorial_mod",
    "first_odd_primes",
    "is_prime",
    "legendre_euler",
    "legendre_oracle",
    "odd_primes_up_to",
    "pow_mod",
    "predicted_symbol_relation",
    "primes_up_to",
    "product_over_transversal",
    "qr_identity",
    "quotient_rank_report",
    "rank2",
    "rank2_quotient_enumerated",
    "rank2_quotient_formula",
    "sum_all_elements",
    "two_torsion_subgroup",
    "validate_odd_prime",
    "verify_pair",
    "verify_transversal",
    "wilson_check",
]
