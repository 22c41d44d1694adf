"""Linear-algebra pipeline on an arbitrary plane model with a supplied basis.

Nothing here checks that the supplied forms are holomorphic or that they span
H^0(K); the numbers are those of the linear system actually given.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DependentSectionsError, InternalCheckError
from .exact import RatMatrix, left_kernel_basis, rank
from .exact.rational import to_q
from .function_field import FFElement, KForm, PlaneModel, coordinatize, ff_lincomb
from .gaussian import symmetric_pairs, wronskian
from .parsing import parse_poly

CAVEAT = ("general model: holomorphy and completeness of the supplied basis are "
          "NOT checked; ranks refer to the supplied linear system only")


@dataclass
class GeneralAnalysis:
    n: int
    equation: list
    basis_size: int
    dim_i2: int
    rank_mu1K: int
    rank_mu2: int
    mu2_dual_checks: int
    caveat: str = CAVEAT


def parse_plane_model(spec: dict) -> PlaneModel:
    """{"lower": [a_0, ..., a_{n-1}]} for y^n + a_{n-1} y^{n-1} + ... + a_0."""
    lower = [parse_poly(s) for s in spec["lower"]]
    return PlaneModel(lower, spec.get("label"))


def parse_form(model: PlaneModel, spec) -> KForm:
    """A differential num(x, y) / den(x, y) dx; each side lists y-coefficients."""
    if isinstance(spec, list):
        spec = {"num": spec}
    num = model.element([parse_poly(s) for s in spec["num"]])
    if "den" in spec:
        num = num / model.element([parse_poly(s) for s in spec["den"]])
    return KForm(num, 1)


def _pair_quadric_rows(vec: Sequence, g: int) -> list[list]:
    a = [[to_q(0)] * g for _ in range(g)]
    for (i, j), c in zip(symmetric_pairs(g), vec):
        if i == j:
            a[i][i] = c
        else:
            a[i][j] = a[j][i] = c / 2
    return a


def _contract(a: list[list], left: Sequence[FFElement], right: Sequence[FFElement]) -> FFElement:
    terms = []
    coeffs = []
    for i, row in enumerate(a):
        for j, c in enumerate(row):
            if c != 0:
                terms.append(left[i] * right[j])
                coeffs.append(c)
    return ff_lincomb(coeffs, terms)


def analyze_general(model: PlaneModel, forms: Sequence[KForm]) -> GeneralAnalysis:
    forms = list(forms)
    g = len(forms)
    if g < 2:
        raise ValueError("need at least two forms")
    if rank(coordinatize(forms)) != g:
        raise DependentSectionsError("supplied forms are linearly dependent")
    prods = [forms[i] * forms[j] for i, j in symmetric_pairs(g)]
    kernel = left_kernel_basis(coordinatize(prods))
    f0 = [w.elt for w in forms]
    f1 = [e.derivative() for e in f0]
    f2 = [e.derivative() for e in f1]
    images = []
    for vec in kernel:
        a = _pair_quadric_rows(vec, g)
        if not _contract(a, f0, f0).is_zero():
            raise InternalCheckError("kernel vector fails the membership identity")
        second = _contract(a, f2, f0)
        if second != -_contract(a, f1, f1):
            raise InternalCheckError("the two expressions for mu2 disagree")
        images.append(KForm(second, 4))
    w1 = [wronskian(forms[i], forms[j]) for i in range(g) for j in range(i + 1, g)]
    nz1 = [w for w in w1 if not w.is_zero()]
    nz2 = [w for w in images if not w.is_zero()]
    return GeneralAnalysis(
        n=model.n,
        equation=[p.render() for p in model.lower],
        basis_size=g,
        dim_i2=len(kernel),
        rank_mu1K=rank(coordinatize(nz1)) if nz1 else 0,
        rank_mu2=rank(coordinatize(nz2)) if nz2 else 0,
        mu2_dual_checks=len(kernel),
    )


__all__ = ["CAVEAT", "GeneralAnalysis", "analyze_general", "parse_form", "parse_plane_model"]
