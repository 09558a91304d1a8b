"""Exact computations in the universal Steenrod algebra Q(p) at odd primes."""

from .algebra import (
    ONE,
    Letter,
    Poly,
    RelationId,
    canonical_compare,
    internal_degree,
    is_admissible,
    length,
    relation,
    relation_R,
    relation_S,
    relations_containing,
    word,
)
from .errors import *  # noqa: F401,F403
from .exprio import decode_json, encode_json, parse_poly, print_poly
from .fractal import (
    SubspaceId,
    apply_map,
    check_lambda_S00,
    check_theta_obstruction,
    in_subspace,
    reduced_relation_R,
    reduced_relation_S,
    right_action,
    verify_K_morphism,
    verify_map_relation,
    verify_reduction_R,
    verify_reduction_S,
)
from .modp import PrimeContext, a_coeff, alpha, binom_exact, binom_ext, padic_digits, validate_prime
from .straighten import (
    LEFTMOST,
    RIGHTMOST,
    PairCache,
    ReductionStats,
    Strategy,
    enumerate_admissible,
    equal_in_Q,
    first_violation,
    normal_form,
    rewrite_pair,
)

__version__ = "0.1.0"
