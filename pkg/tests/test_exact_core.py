from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gaussmaps.exact import (
    RatFunc,
    RatMatrix,
    UniPoly,
    X,
    is_prime,
    is_squarefree,
    kernel_basis,
    left_kernel_basis,
    modular_rank,
    poly_gcd,
    poly_inverse_mod,
    poly_lcm,
    poly_xgcd,
    random_prime,
    rank,
    remove_factors_of,
    resultant_y,
    solve,
    squarefree_part,
)
from gaussmaps.exact.rational import Q, q_str, to_q

small_int = st.integers(-6, 6)
polys = st.lists(small_int, min_size=0, max_size=7).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*c):
    return UniPoly(list(c))


# -- rationals ---------------------------------------------------------------

def test_to_q_accepts_exact_inputs():
    assert to_q(3) == 3
    assert to_q("3/6") == Q(1, 2)
    assert to_q(Fraction(2, 4)) == Q(1, 2)


def test_to_q_rejects_floats():
    with pytest.raises(TypeError):
        to_q(0.5)


def test_q_str():
    assert q_str(Q(3, 6)) == "1/2"
    assert q_str(Q(-4, 2)) == "-2"


# -- polynomials ---------------------------------------------------------------

def test_gcd_examples():
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_gcd(UniPoly(), 3 * X + 3) == X + 1
    f = X**9 - 1
    assert poly_gcd(f, f.derivative()) == UniPoly.constant(1)
    assert poly_gcd(UniPoly(), UniPoly()).is_zero()


def test_gcd_handles_shared_power_of_x():
    a = X**3 * (X + 2)
    b = X**2 * (X + 2) * (X - 1)
    assert poly_gcd(a, b) == X**2 * (X + 2)


def test_squarefree_examples():
    assert is_squarefree(X**9 - 1)
    assert not is_squarefree(X**2)
    assert is_squarefree(X**10 - 1)
    with pytest.raises(ValueError):
        is_squarefree(UniPoly())
    assert squarefree_part((X - 1) ** 3 * (X + 1)) == (X - 1) * (X + 1)


def test_remove_factors_of():
    g = (X - 1) ** 2 * (X + 3)
    assert remove_factors_of(g, X**2 - 1) == X + 3


def test_resultant_examples():
    f = X**8 - 1
    B = [-f, UniPoly(), UniPoly.constant(1)]  # y^2 - f
    assert resultant_y([UniPoly(), UniPoly.constant(1)], B) == -f
    assert resultant_y([UniPoly.constant(1)], B) == UniPoly.constant(1)
    assert resultant_y([-X, UniPoly.constant(1)], B) == X**2 - f


def test_divmod_and_exact_div():
    q, r = divmod(X**3 + 2 * X + 1, X - 1)
    assert q * (X - 1) + r == X**3 + 2 * X + 1
    assert r.degree < 1
    with pytest.raises(ArithmeticError):
        (X**2 + 1).exact_div(X - 1)


def test_render_and_compose():
    assert (Q(3, 2) * X**2 + X - 5).render() == "3/2*x^2 + x - 5"
    assert (X**2).compose(X + 1) == X**2 + 2 * X + 1


@given(polys, polys)
def test_gcd_divides_both_and_is_monic(a, b):
    g = poly_gcd(a, b)
    if a.is_zero() and b.is_zero():
        assert g.is_zero()
        return
    assert g.lc == 1
    assert g.divides(a) and g.divides(b)


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_recovers_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert c.monic().divides(g) or c.is_constant()
    assert g.divides(a * c)


@given(nonzero_polys, nonzero_polys)
def test_xgcd_bezout(a, b):
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g
    assert g == poly_gcd(a, b)
    assert poly_lcm(a, b) * g == (a * b).monic()


@given(nonzero_polys)
def test_inverse_mod(a):
    m = X**5 - X - 1  # irreducible over Q
    a = a % m
    if a.is_zero():
        return
    assert (a * poly_inverse_mod(a, m)) % m == UniPoly.constant(1)


# -- rational functions ------------------------------------------------------

def test_ratfunc_normal_form():
    r = RatFunc(X**2 - 1, 2 * X - 2)
    assert r.num == Q(1, 2) * (X + 1) and r.den == UniPoly.constant(1)
    assert RatFunc(X, X**2).den == X
    assert RatFunc(X + 1, X).degree == 0
    with pytest.raises(ZeroDivisionError):
        RatFunc(X, UniPoly())


@given(nonzero_polys, nonzero_polys, nonzero_polys, nonzero_polys)
def test_ratfunc_field_axioms(a, b, c, d):
    r, s = RatFunc(a, b), RatFunc(c, d)
    assert (r + s) - s == r
    assert (r * s) / s == r
    assert (r * s).derivative() == r.derivative() * s + r * s.derivative()


# -- linear algebra ---------------------------------------------------------

def test_rank_examples():
    I5 = RatMatrix.identity(5)
    assert rank(I5) == 5 and kernel_basis(I5) == []
    M = RatMatrix([[1, 1]])
    assert rank(M) == 1
    assert kernel_basis(M) == [(Q(1), Q(-1))]
    assert modular_rank(I5, 101) == 5
    assert modular_rank(RatMatrix([[2, 4], [1, 2]]), 101) == 1


def test_solve_and_left_kernel():
    M = RatMatrix([[1, 2], [3, 4], [4, 6]])
    assert solve(M, [1, 1, 2]) == (Q(-1), Q(1))
    assert solve(M, [1, 0, 0]) is None
    (c,) = left_kernel_basis(M)
    assert all(sum(ci * M[i, j] for i, ci in enumerate(c)) == 0 for j in range(2))


def test_modular_rank_rejects_bad_prime():
    with pytest.raises(ValueError):
        modular_rank(RatMatrix([["1/7", 1]]), 7)


def test_primes():
    assert is_prime(1073741789)
    assert not is_prime(1073741789 * 3)
    rng = random.Random(1)
    for _ in range(5):
        p = random_prime(30, rng)
        assert is_prime(p) and p.bit_length() == 30


matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=c, max_size=c),
    min_size=1, max_size=5))


@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_column_permutation(rows, rnd):
    M = RatMatrix(rows)
    perm = list(range(M.ncols))
    rnd.shuffle(perm)
    assert rank(M.column_permuted(perm)) == rank(M)
    assert rank(M.transpose()) == rank(M)


@given(matrices)
def test_kernel_vectors_annihilate(rows):
    M = RatMatrix(rows)
    ker = kernel_basis(M)
    assert len(ker) == M.ncols - rank(M)
    for v in ker:
        assert all(a == 0 for a in M @ v)


def test_modular_rank_agrees_on_random_matrices():
    # 1000 small integer matrices, three random 30-bit primes each
    rng = random.Random(7)
    primes = [random_prime(30, rng) for _ in range(3)]
    for _ in range(1000):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = RatMatrix([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        exact = rank(M)
        for p in primes:
            assert modular_rank(M, p) == exact
