"""Exact arithmetic: rationals, polynomials, rational functions, matrices."""
from .linalg import RatMatrix, kernel_basis, left_kernel_basis, modular_rank, rank, solve
from .poly import (
    UniPoly,
    X,
    is_squarefree,
    poly_gcd,
    poly_inverse_mod,
    poly_lcm,
    poly_xgcd,
    remove_factors_of,
    resultant_y,
    squarefree_part,
)
from .primes import PREPASS_PRIME, is_prime, random_prime
from .ratfunc import RatFunc, common_denominator, lincomb
from .rational import ONE, ZERO, Q, q_str, to_q
