"""Multiplication map on S^2 H^0(K), its kernel I_2, and the first and second
Gaussian maps.

Conventions
-----------
A quadric is stored as the symmetric matrix (a_ij) of sum a_ij w_i (x) w_j in
the canonical basis ordering.  The symmetric product is
w_i . w_j = (w_i (x) w_j + w_j (x) w_i) / 2, so a pair coefficient c_ij
(i < j) contributes a_ij = a_ji = c_ij / 2.  Pairs (i <= j) are ordered
lexicographically.

The first Gaussian map on a pair of sections g_0 l, g_1 l is
(g_0 g_1' - g_1 g_0') with weight 2w + 1.  The second Gaussian map uses x as
the local coordinate:  mu2(Q) = sum a_ij f_i'' f_j (dx)^4, cross-checked
against -sum a_ij f_i' f_j' (dx)^4.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .canonical import CanonicalBasis, canonical_basis, pencil_F, subsystem_K_minus_F
from .errors import DependentSectionsError, InternalCheckError, NotInI2Error
from .exact import PREPASS_PRIME, ONE, RatMatrix, left_kernel_basis, modular_rank, rank
from .exact.rational import to_q
from .function_field import CurveModel, FFElement, KForm, coordinatize, ff_lincomb


@lru_cache(maxsize=64)
def basis_of(curve: CurveModel) -> CanonicalBasis:
    return canonical_basis(curve)


def symmetric_pairs(g: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g) for j in range(i, g)]


@dataclass(frozen=True, eq=False)
class QuadricForm:
    curve: CurveModel
    matrix: RatMatrix

    def __post_init__(self):
        g = self.curve.genus
        if self.matrix.nrows != g or self.matrix.ncols != g:
            raise ValueError(f"quadric matrix must be {g}x{g}")
        if not self.matrix.is_symmetric():
            raise ValueError("quadric matrix must be symmetric")

    @classmethod
    def from_pair_vector(cls, curve: CurveModel, vec: Sequence) -> "QuadricForm":
        g = curve.genus
        a = [[to_q(0)] * g for _ in range(g)]
        for (i, j), c in zip(symmetric_pairs(g), vec):
            c = to_q(c)
            if i == j:
                a[i][i] = c
            else:
                a[i][j] = a[j][i] = c / 2
        return cls(curve, RatMatrix(a, g))

    @classmethod
    def from_pairs(cls, curve: CurveModel, terms: dict) -> "QuadricForm":
        """Build from {(i, j): c} meaning sum c * w_i . w_j."""
        g = curve.genus
        index = {p: k for k, p in enumerate(symmetric_pairs(g))}
        vec = [0] * len(index)
        for (i, j), c in terms.items():
            key = (min(i, j), max(i, j))
            vec[index[key]] += to_q(c)
        return cls.from_pair_vector(curve, vec)

    def pair_vector(self) -> tuple:
        m = self.matrix.rows
        return tuple(m[i][i] if i == j else 2 * m[i][j] for i, j in symmetric_pairs(self.curve.genus))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadricForm) and self.curve == other.curve and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.curve, self.matrix))

    def scaled(self, s) -> "QuadricForm":
        s = to_q(s)
        return QuadricForm(self.curve, RatMatrix([[a * s for a in r] for r in self.matrix.rows]))


@dataclass(frozen=True, eq=False)
class GaussMapImage:
    source: str
    images: tuple[KForm, ...]
    rank: int
    prepass_rank: int | None = field(default=None)


def image_rank(images: Sequence[KForm]) -> tuple[int, int | None]:
    """Exact rank of the span, preceded by a mod-p pre-pass."""
    nonzero = [w for w in images if not w.is_zero()]
    if not nonzero:
        return 0, 0
    M = coordinatize(nonzero)
    try:
        pre = modular_rank(M, PREPASS_PRIME)
    except ValueError:
        pre = None
    exact = rank(M)
    if pre is not None and pre > exact:  # pragma: no cover - impossible by theory
        raise InternalCheckError("modular rank exceeds exact rank")
    return exact, pre


# ---------------------------------------------------------------------------
# I_2

def products_matrix(basis: CanonicalBasis) -> RatMatrix:
    """Rows: coordinates of w_i * w_j in H^0(2K), pairs in lexicographic order."""
    forms = basis.forms
    prods = [forms[i] * forms[j] for i, j in symmetric_pairs(len(forms))]
    return coordinatize(prods)


def _contract(Q: QuadricForm, left: Sequence[FFElement], right: Sequence[FFElement]) -> FFElement:
    """sum_ij a_ij left_i right_j."""
    rows = Q.matrix.rows
    terms, coeffs = [], []
    for i, row in enumerate(rows):
        if all(a == 0 for a in row):
            continue
        idx = [j for j, a in enumerate(row) if a != 0]
        inner = ff_lincomb([row[j] for j in idx], [right[j] for j in idx])
        if not inner.is_zero():
            terms.append(left[i] * inner)
            coeffs.append(ONE)
    if not terms:
        return Q.curve.zero()
    return ff_lincomb(coeffs, terms)


def membership_residual(Q: QuadricForm) -> FFElement:
    """sum a_ij f_i f_j; zero exactly when Q lies in I_2."""
    d = basis_of(Q.curve).derivatives
    f0 = [t[0] for t in d]
    return _contract(Q, f0, f0)


def in_i2(Q: QuadricForm) -> bool:
    return membership_residual(Q).is_zero()


def i2_basis(curve: CurveModel) -> list[QuadricForm]:
    """Basis of the quadrics through the canonical curve."""
    basis = basis_of(curve)
    M = products_matrix(basis)
    out = []
    for vec in left_kernel_basis(M):
        Q = QuadricForm.from_pair_vector(curve, vec)
        if not in_i2(Q):
            raise InternalCheckError("kernel vector fails the membership identity")
        out.append(Q)
    return out


# ---------------------------------------------------------------------------
# first Gaussian map

def wronskian(s0: KForm, s1: KForm) -> KForm:
    """(g_0 g_1' - g_1 g_0') with weight 2w + 1; no independence check."""
    if s0.weight != s1.weight:
        raise ValueError("sections must have equal weight")
    g0, g1 = s0.elt, s1.elt
    w = g0 * g1.derivative() - g1 * g0.derivative()
    return KForm(w, 2 * s0.weight + 1)


def mu1(sections: Sequence[KForm], source: str = "Lambda^2 V") -> GaussMapImage:
    """Wronskians of all pairs i < j of linearly independent sections."""
    sections = list(sections)
    if sections:
        if rank(coordinatize(sections)) != len(sections):
            raise DependentSectionsError("input sections are linearly dependent")
    images = tuple(wronskian(sections[i], sections[j])
                   for i in range(len(sections)) for j in range(i + 1, len(sections)))
    rk, pre = image_rank(images)
    return GaussMapImage(source, images, rk, pre)


def mu1_canonical(curve: CurveModel) -> GaussMapImage:
    return mu1(basis_of(curve).forms, "Lambda^2 H^0(K)")


def mu1_restricted(curve: CurveModel) -> GaussMapImage:
    """mu1 on the differentials vanishing on the fiber over x = 0."""
    return mu1(subsystem_K_minus_F(basis_of(curve)), "Lambda^2 H^0(K-F)")


def mu1_pencil(curve: CurveModel) -> KForm:
    u0, u1 = pencil_F(curve)
    return wronskian(u0, u1)


# ---------------------------------------------------------------------------
# second Gaussian map

def mu2(Q: QuadricForm) -> KForm:
    """Image of a quadric in I_2 as a 4-canonical form.

    Both local expressions are evaluated; disagreement raises
    InternalCheckError.
    """
    if not in_i2(Q):
        raise NotInI2Error("quadric does not vanish on the canonical curve")
    d = basis_of(Q.curve).derivatives
    f0 = [t[0] for t in d]
    f1 = [t[1] for t in d]
    f2 = [t[2] for t in d]
    second = _contract(Q, f2, f0)
    first = -_contract(Q, f1, f1)
    if second != first:
        raise InternalCheckError("the two expressions for mu2 disagree")
    return KForm(second, 4)


def rank_mu2(curve: CurveModel, quadrics: Sequence[QuadricForm] | None = None) -> GaussMapImage:
    if quadrics is None:
        quadrics = i2_basis(curve)
    images = tuple(mu2(Q) for Q in quadrics)
    rk, pre = image_rank(images)
    return GaussMapImage("I_2", images, rk, pre)


__all__ = [
    "GaussMapImage",
    "QuadricForm",
    "basis_of",
    "i2_basis",
    "image_rank",
    "in_i2",
    "membership_residual",
    "mu1",
    "mu1_canonical",
    "mu1_pencil",
    "mu1_restricted",
    "mu2",
    "products_matrix",
    "rank_mu2",
    "symmetric_pairs",
    "wronskian",
]
