"""Quadrics of rank at most 4 built from a pencil on L and a pencil on K - L.

Given sections u0, u1 of L and w0, w1 of K - L, the quadric
(u0 w0).(u1 w1) - (u0 w1).(u1 w0) lies in I_2, and its image under mu2 is
the product of the two Wronskians.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonical import pencil_F, subsystem_K_minus_F
from .errors import InternalCheckError, NotAdjointError
from .exact import ZERO, RatMatrix, solve
from .exact.rational import to_q
from .function_field import CurveModel, KForm, coordinate_frame
from .gaussian import QuadricForm, basis_of, in_i2, mu2, wronskian


def canonical_coordinates(curve: CurveModel, form: KForm) -> tuple:
    """Coordinates of a weight-1 form in the canonical basis.

    Raises NotAdjointError when the form is outside the span.
    """
    if form.weight != 1:
        raise NotAdjointError("only differentials have canonical coordinates")
    basis = basis_of(curve)
    M, _, _ = coordinate_frame(list(basis.forms) + [form])
    target = M.rows[-1]
    A = RatMatrix(zip(*M.rows[:-1]), len(basis)) if M.ncols else RatMatrix([], len(basis))
    sol = solve(A, target) if M.ncols else tuple([ZERO] * len(basis))
    if sol is None:
        raise NotAdjointError("product is not in the span of the canonical basis")
    return sol


@dataclass(frozen=True, eq=False)
class AdjointPair:
    """Pencils (u0, u1) on L and (w0, w1) on K - L with product coordinates.

    ``products[a][b]`` is the canonical coordinate vector of u_a * w_b.
    """

    curve: CurveModel
    u: tuple[KForm, KForm]
    w: tuple[KForm, KForm]
    products: tuple[tuple[tuple, tuple], tuple[tuple, tuple]]

    @classmethod
    def build(cls, curve: CurveModel, u: Sequence[KForm], w: Sequence[KForm]) -> "AdjointPair":
        u0, u1 = u
        w0, w1 = w
        if u0.weight != u1.weight or w0.weight != w1.weight or u0.weight + w0.weight != 1:
            raise NotAdjointError("pencil weights must add up to 1")
        prods = tuple(
            tuple(canonical_coordinates(curve, ua * wb) for wb in (w0, w1)) for ua in (u0, u1))
        return cls(curve, (u0, u1), (w0, w1), prods)


def _sym_outer(v: Sequence, w: Sequence) -> list[list]:
    g = len(v)
    return [[(v[i] * w[j] + w[i] * v[j]) / 2 for j in range(g)] for i in range(g)]


def adjoint_quadric(pair: AdjointPair) -> QuadricForm:
    """(u0 w0).(u1 w1) - (u0 w1).(u1 w0) in canonical coordinates."""
    (p00, p01), (p10, p11) = pair.products
    A = _sym_outer(p00, p11)
    B = _sym_outer(p01, p10)
    g = len(A)
    Q = QuadricForm(pair.curve, RatMatrix([[A[i][j] - B[i][j] for j in range(g)] for i in range(g)], g))
    if not in_i2(Q):
        raise InternalCheckError("adjoint quadric fails the membership identity")
    return Q


def quadric_rank(Q: QuadricForm | RatMatrix) -> int:
    """Rank of a symmetric bilinear form by congruence elimination over Q."""
    M = Q.matrix if isinstance(Q, QuadricForm) else Q
    a = [list(r) for r in M.rows]
    n = len(a)
    active = list(range(n))
    rk = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in active for j in active if j > i and a[i][j] != 0), None)
            if hit is None:
                break
            i, j = hit
            # row/col i += row/col j makes the diagonal 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f != 0:
                for j in active:
                    a[i][j] -= f * a[piv][j]
        for i in active:
            a[i][piv] = a[piv][i] = ZERO
        rk += 1
    return rk


def psi_pair(curve: CurveModel, i: int, j: int) -> AdjointPair:
    t = subsystem_K_minus_F(basis_of(curve))
    return AdjointPair.build(curve, pencil_F(curve), (t[i], t[j]))


def psi(curve: CurveModel, i: int, j: int) -> QuadricForm:
    """Quadric attached to t_i ^ t_j with the pencil (1, 1/x)."""
    if not i < j:
        raise ValueError("psi needs i < j")
    return adjoint_quadric(psi_pair(curve, i, j))


def psi_image(curve: CurveModel) -> list[QuadricForm]:
    r = len(subsystem_K_minus_F(basis_of(curve)))
    return [psi(curve, i, j) for i in range(r) for j in range(i + 1, r)]


def factorization_sides(pair: AdjointPair) -> tuple[KForm, KForm]:
    """(mu2 of the adjoint quadric, product of the two Wronskians)."""
    lhs = mu2(adjoint_quadric(pair))
    rhs = wronskian(*pair.u) * wronskian(*pair.w)
    return lhs, rhs


def factorization_check(pair: AdjointPair) -> bool:
    lhs, rhs = factorization_sides(pair)
    return lhs == rhs


__all__ = [
    "AdjointPair",
    "adjoint_quadric",
    "canonical_coordinates",
    "factorization_check",
    "factorization_sides",
    "psi",
    "psi_image",
    "psi_pair",
    "quadric_rank",
]
