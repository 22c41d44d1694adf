"""Orders of vanishing of k-canonical forms and base loci of linear systems.

Places are handled in Galois-orbit classes keyed by squarefree moduli, and
no polynomial is ever factored: whenever an order differs between points of
a class, the modulus is split by a gcd and each piece is tracked on its own.

Local data used throughout, for y^n = f(x) with f squarefree of degree m:

* over a root of f the cover is totally ramified, ord(y) = 1,
  ord(x - alpha) = n and ord(dx) = n - 1;
* at infinity with gcd(n, m) = 1 there is one place, ord(x) = -n,
  ord(y) = -m, ord(dx) = -n - 1;
* at infinity with n | m there are n unramified places, indexed by the roots
  w of w^n = c, on which y = w t^(-m/n) (f(1/t) t^m / c)^(1/n), t = 1/x.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalCheckError
from .exact import (
    ONE,
    ZERO,
    Q,
    RatFunc,
    UniPoly,
    poly_gcd,
    poly_inverse_mod,
    remove_factors_of,
    resultant_y,
    squarefree_part,
)
from .function_field import CurveModel, KForm

# ---------------------------------------------------------------------------
# place classes


@dataclass(frozen=True)
class RamPlaceClass:
    """Points (alpha, 0) with p(alpha) = 0, for p a squarefree divisor of f."""

    p: UniPoly

    def __post_init__(self):
        if self.p.degree < 1:
            raise ValueError("ramification modulus must have positive degree")
        object.__setattr__(self, "p", self.p.monic())

    def check(self, curve: CurveModel) -> None:
        if not self.p.divides(curve.f):
            raise ValueError(f"{self.p.render()} does not divide f")
        if squarefree_part(self.p) != self.p:
            raise ValueError("ramification modulus must be squarefree")


@dataclass(frozen=True)
class InfPlaceClass:
    """Places at infinity.

    ``d == 1``: the single totally ramified place (``q`` is None).
    ``d == n``: the places whose leading coefficient w is a root of ``q``,
    a monic divisor of w^n - c.
    """

    d: int
    q: UniPoly | None = None


def ramification_classes(curve: CurveModel) -> list[RamPlaceClass]:
    return [RamPlaceClass(curve.f.monic())]


def infinity_classes(curve: CurveModel) -> list[InfPlaceClass]:
    if curve.d == 1:
        return [InfPlaceClass(1)]
    return [InfPlaceClass(curve.n, UniPoly.monomial(curve.n) - curve.c)]


# ---------------------------------------------------------------------------
# piecewise bookkeeping


def _multiplicity_pieces(p: UniPoly, N: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split squarefree p into pieces on which the multiplicity in N is constant."""
    out = []
    rest, e, M = p, 0, N
    while rest.degree > 0:
        h = poly_gcd(rest, M)
        done = rest.exact_div(h)
        if done.degree > 0:
            out.append((done.monic(), e))
        rest = h
        if rest.degree > 0:
            M = M.exact_div(rest)
            e += 1
    return out


def _refine(partitions: Sequence[Sequence[tuple[UniPoly, int]]]) -> list[tuple[UniPoly, list[int]]]:
    """Common refinement of partitions of the same squarefree modulus."""
    if not partitions:
        return []
    pieces = [(P, [v]) for P, v in partitions[0]]
    for part in partitions[1:]:
        nxt = []
        for P, vals in pieces:
            for R, v in part:
                h = poly_gcd(P, R)
                if h.degree > 0:
                    nxt.append((h, vals + [v]))
        pieces = nxt
    return pieces


def valuation_pieces(p: UniPoly, r: RatFunc) -> list[tuple[UniPoly, int]]:
    """Pieces of p with the valuation of r at each (multiplicity num - den)."""
    return [(P, vals[0] - vals[1]) for P, vals in
            _refine([_multiplicity_pieces(p, r.num), _multiplicity_pieces(p, r.den)])]


# ---------------------------------------------------------------------------
# ramification places


def ram_orders(form: KForm, place: RamPlaceClass) -> list[tuple[UniPoly, int]]:
    """Orders of ``form`` on the pieces of ``place``; empty for the zero form."""
    curve = form.curve
    place.check(curve)
    n, k = curve.n, form.weight
    parts = []
    for b, r in enumerate(form.elt.coeffs):
        if r.is_zero():
            continue
        parts.append([(P, b + n * v) for P, v in valuation_pieces(place.p, r)])
    return [(P, min(vals) + k * (n - 1)) for P, vals in _refine(parts)]


def ord_at_ram(form: KForm, place: RamPlaceClass) -> int | float:
    """Minimum order over the points of the class (inf for the zero form).

    The candidate orders b + n v_p(r_b) are distinct mod n, so no
    cancellation can occur between y-powers.
    """
    pieces = ram_orders(form, place)
    return min(o for _, o in pieces) if pieces else math.inf


# ---------------------------------------------------------------------------
# infinity


def _series_mul(a: list, b: list, N: int) -> list:
    out = [ZERO] * N
    for i, ai in enumerate(a[:N]):
        if ai == 0:
            continue
        for j in range(min(len(b), N - i)):
            out[i + j] += ai * b[j]
    return out


def _series_inv(a: list, N: int) -> list:
    inv0 = ONE / a[0]
    out = [ZERO] * N
    out[0] = inv0
    for j in range(1, N):
        s = sum((a[i] * out[j - i] for i in range(1, min(j, len(a) - 1) + 1)), ZERO)
        out[j] = -s * inv0
    return out


def _series_power(p: list, alpha, N: int) -> list:
    """(p_0 + p_1 t + ...)^alpha with p_0 = 1 (J.C.P. Miller recurrence)."""
    q = [ZERO] * N
    q[0] = ONE
    for j in range(1, N):
        s = ZERO
        for i in range(1, min(j, len(p) - 1) + 1):
            if p[i] != 0:
                s += ((alpha + 1) * i - j) * p[i] * q[j - i]
        q[j] = s / j
    return q


def _poly_series(p: UniPoly, N: int) -> list:
    c = list(p.coeffs[:N])
    return c + [ZERO] * (N - len(c))


def precision_bound(curve: CurveModel, weight: int) -> int:
    """Highest order a nonzero holomorphic weight-k form can reach at a single place."""
    return weight * (2 * curve.genus - 2) + 1


def pole_degree_bound(form: KForm) -> int:
    """Upper bound for the degree of the pole divisor of a form on a d = n model.

    Summed term by term: over a root of f with multiplicity e in the
    denominator of r_b the term r_b y^b has a pole of order n e - b, over
    other denominator roots at most n e per fiber, and at each of the n
    places at infinity at most -ord.
    """
    curve = form.curve
    n, k = curve.n, form.weight
    s = curve.m // n
    total = 0
    worst_inf = 0
    for b, r in enumerate(form.elt.coeffs):
        if r.is_zero():
            continue
        D = r.den
        total += n * D.degree - b * poly_gcd(D, curve.f).degree
        worst_inf = max(worst_inf, -(D.degree - r.num.degree - s * b - 2 * k))
    return total + n * worst_inf


def _laurent_at_infinity(form: KForm, bound: int) -> tuple[int, list[list]]:
    """Coefficients of the form in t = 1/x, as polynomials in w.

    Returns (e_min, P) with P[j - e_min] the coefficient list (in w) of t^j,
    for e_min <= j <= bound.
    """
    curve = form.curve
    n, k = curve.n, form.weight
    s = curve.m // n
    terms = []
    for b, r in enumerate(form.elt.coeffs):
        if r.is_zero():
            continue
        e_b = r.den.degree - r.num.degree - s * b - 2 * k
        terms.append((b, r, e_b))
    e_min = min(e for _, _, e in terms)
    N_max = max(bound - e_min + 1, 1)
    # S(t) = (f(1/t) t^m / c)^(1/n)
    base = [a / curve.c for a in _poly_series(curve.f.reversed(), N_max)]
    S = _series_power(base, Q(1, n), N_max)
    sign = -1 if k % 2 else 1
    P = [[ZERO] * n for _ in range(bound - e_min + 1)]
    for b, r, e_b in terms:
        N_b = bound - e_b + 1
        if N_b <= 0:
            continue
        ser = _series_mul(_poly_series(r.num.reversed(), N_b),
                          _series_inv(_poly_series(r.den.reversed(), N_b), N_b), N_b)
        Sb = [ONE] + [ZERO] * (N_b - 1)
        for _ in range(b):
            Sb = _series_mul(Sb, S, N_b)
        ser = _series_mul(ser, Sb, N_b)
        for i, v in enumerate(ser):
            if v != 0:
                P[e_b - e_min + i][b] += sign * v
    return e_min, P


def infinity_orders(form: KForm, place: InfPlaceClass) -> list[tuple[UniPoly | None, int]]:
    """Orders of ``form`` at the places of ``place``; empty for the zero form."""
    curve = form.curve
    if form.is_zero():
        return []
    n, k = curve.n, form.weight
    if place.d == 1:
        if curve.d != 1:
            raise ValueError("place class does not match the curve")
        m = curve.m
        o = min(-n * r.degree - m * b for b, r in enumerate(form.elt.coeffs) if not r.is_zero())
        return [(None, o + k * (-n - 1))]
    if curve.d != n or place.d != n:
        raise ValueError("place class does not match the curve")
    done = _split_at_infinity(form, place.q, precision_bound(curve, k))
    if done is None:
        # forms with poles can vanish to higher order than holomorphic ones
        rigorous = pole_degree_bound(form) + k * (2 * curve.genus - 2) + 1
        done = _split_at_infinity(form, place.q, rigorous)
    if done is None:
        raise InternalCheckError("series expansion exhausted the precision bound")
    return done


def _split_at_infinity(form: KForm, q: UniPoly, bound: int) -> list | None:
    """Split q by the first nonvanishing Laurent coefficient; None if t^bound is reached."""
    e_min, P = _laurent_at_infinity(form, bound)
    pending = [q]
    done = []
    for offset, coeffs in enumerate(P):
        if not pending:
            break
        poly = UniPoly._raw(list(coeffs))
        if poly.is_zero():
            continue
        nxt = []
        for piece in pending:
            h = poly_gcd(piece, poly)
            if h.degree == piece.degree:
                nxt.append(piece)
                continue
            done.append((piece.exact_div(h).monic(), e_min + offset))
            if h.degree > 0:
                nxt.append(h)
        pending = nxt
    return None if pending else done


def ord_at_infinity(form: KForm, place: InfPlaceClass) -> int | float:
    pieces = infinity_orders(form, place)
    return min(o for _, o in pieces) if pieces else math.inf


# ---------------------------------------------------------------------------
# affine unramified part: resultants and dynamic splitting


def _trim(a: list) -> list:
    while a and a[-1].is_zero():
        a.pop()
    return a


def _reduce(a: Sequence[UniPoly], M: UniPoly) -> list:
    return _trim([c % M for c in a])


def _make_monic(a: Sequence[UniPoly], M: UniPoly) -> list[tuple[UniPoly, list]]:
    """Split M until a (a polynomial in y over Q[x]/M) is monic or zero."""
    out = []
    stack = [(M, list(a))]
    while stack:
        M, a = stack.pop()
        a = _reduce(a, M)
        if not a:
            out.append((M, []))
            continue
        lc = a[-1]
        h = poly_gcd(lc, M)
        if h.degree == 0:
            inv = poly_inverse_mod(lc, M)
            out.append((M, [(c * inv) % M for c in a]))
            continue
        # lc is a zero divisor: it vanishes on h and is a unit on M / h
        stack.append((M.exact_div(h).monic(), a))
        stack.append((h, a[:-1]))
    return out


def _ydivrem(a: list, b: list, M: UniPoly) -> list:
    """Remainder of a by the monic b over Q[x]/M."""
    a = list(a)
    db = len(b) - 1
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] % M
        if c.is_zero():
            continue
        for j in range(db + 1):
            a[k + j] = (a[k + j] - c * b[j]) % M
    return _reduce(a[:db], M)


def _dynamic_gcd(a: list, b: list, M: UniPoly) -> list[tuple[UniPoly, list]]:
    out = []
    stack = [(M, a, b)]
    while stack:
        M, a, b = stack.pop()
        for Mi, bm in _make_monic(b, M):
            if not bm:
                out.extend(_make_monic(a, Mi))
            else:
                stack.append((Mi, bm, _ydivrem(_reduce(a, Mi), bm, Mi)))
    return out


def _clear_denominators(form: KForm) -> list[UniPoly]:
    curve = form.curve
    elt = form.elt
    dens = [c.den for c in elt.coeffs if not c.is_zero()]
    D = UniPoly.constant(1)
    for d in dens:
        D = D * d.exact_div(poly_gcd(D, d))
    if remove_factors_of(D, curve.f).degree > 0:
        raise InternalCheckError("a denominator is not supported over the roots of f")
    return [c.num * D.exact_div(c.den) if not c.is_zero() else UniPoly() for c in elt.coeffs]


@dataclass(frozen=True)
class AffineCertificate:
    """A common zero over the roots of ``modulus``: for each root x0 the
    monic polynomial ``ygcd`` (in y) has a root that kills every form."""

    modulus: UniPoly
    ygcd: tuple[UniPoly, ...]


def affine_common_zeros(images: Sequence[KForm]) -> tuple[UniPoly, list[AffineCertificate]]:
    """Common zeros of the forms at affine points with f(x) != 0.

    Returns the squarefree gcd G of the resultants (after removing roots of f)
    together with certificates of actual common zeros.
    """
    curve = images[0].curve
    n = curve.n
    rel = [-curve.f] + [UniPoly()] * (n - 1) + [UniPoly.constant(1)]
    numerators = [_clear_denominators(w) for w in images if not w.is_zero()]
    G = UniPoly()
    for N in numerators:
        G = poly_gcd(G, resultant_y(N, rel))
        if G.degree == 0:
            return G, []
    G = squarefree_part(remove_factors_of(G, curve.f))
    if G.degree <= 0:
        return G, []
    results = [(G, _reduce(rel, G))]
    for N in numerators:
        nxt = []
        for Mi, gi in results:
            nxt.extend(_dynamic_gcd(gi, _reduce(N, Mi), Mi))
        results = nxt
    certs = [AffineCertificate(Mi.monic(), tuple(gi)) for Mi, gi in results if len(gi) >= 2]
    return G, certs


# ---------------------------------------------------------------------------
# verdict


@dataclass(frozen=True)
class BaseLocusVerdict:
    ram: dict
    ram_base: tuple
    affine_unram: str | tuple
    infinity: dict
    infinity_base: tuple
    is_free: bool
    resultant_gcd_degree: int = field(default=0)

    def _affine_by_degree(self) -> list[tuple[int, UniPoly]]:
        merged: dict[int, UniPoly] = {}
        for c in self.affine_unram:
            k = len(c.ygcd) - 1
            merged[k] = merged[k] * c.modulus if k in merged else c.modulus
        return sorted(merged.items(), key=lambda t: t[0])

    def summary(self) -> dict:
        def piece(p):
            return None if p is None else p.render("w")

        return {
            "is_free": self.is_free,
            "ram": [{"modulus": cls.p.render(), "min_order": o} for cls, o in self.ram.items()],
            "ram_base_points": [{"modulus": p.render(), "order": o} for p, o in self.ram_base],
            "affine_unramified": self.affine_unram if isinstance(self.affine_unram, str) else [
                {"modulus": M.render(), "y_gcd_degree": k} for k, M in self._affine_by_degree()],
            "infinity": [{"class": piece(cls.q) if cls.q is not None else "single place",
                          "min_order": o} for cls, o in self.infinity.items()],
            "infinity_base_points": [{"modulus": piece(p) if p is not None else "single place",
                                      "order": o} for p, o in self.infinity_base],
        }


def _class_minimum(piece_lists: list[list[tuple]]) -> tuple[int, list[tuple]]:
    """Refine per-image piece lists; return class minimum and base pieces."""
    if any(p is None for pl in piece_lists for p, _ in pl):
        per_piece = [(None, [o for pl in piece_lists for _, o in pl])]
    else:
        per_piece = _refine(piece_lists)
    mins = [(P, min(vals)) for P, vals in per_piece]
    return min(o for _, o in mins), _merge_by_order([(P, o) for P, o in mins if o >= 1])


def _merge_by_order(pieces: list[tuple]) -> list[tuple]:
    """One piece per order, so the verdict does not depend on how the
    spanning forms happened to split the moduli."""
    merged: dict[int, UniPoly | None] = {}
    for P, o in pieces:
        if P is None or o not in merged:
            merged[o] = P
        else:
            merged[o] = merged[o] * P
    return [(P, o) for o, P in sorted(merged.items())]


def base_locus(images: Sequence[KForm], ram_classes: Sequence[RamPlaceClass] | None = None) -> BaseLocusVerdict:
    """Common zeros of a linear system given by spanning forms."""
    images = [w for w in images if not w.is_zero()]
    if not images:
        raise ValueError("base locus of an all-zero system is undefined")
    curve = images[0].curve
    if not isinstance(curve, CurveModel):
        raise ValueError("base locus needs a superelliptic model")
    if len({w.weight for w in images}) != 1:
        raise ValueError("forms must share a weight")
    if ram_classes is None:
        ram_classes = ramification_classes(curve)

    ram, ram_base = {}, []
    for cls in ram_classes:
        low, base = _class_minimum([ram_orders(w, cls) for w in images])
        ram[cls] = low
        ram_base.extend(base)

    G, certs = affine_common_zeros(images)
    affine = "empty" if not certs else tuple(certs)

    inf, inf_base = {}, []
    for cls in infinity_classes(curve):
        low, base = _class_minimum([infinity_orders(w, cls) for w in images])
        inf[cls] = low
        inf_base.extend(base)

    is_free = not ram_base and not certs and not inf_base
    return BaseLocusVerdict(ram, tuple(ram_base), affine, inf, tuple(inf_base), is_free,
                            max(G.degree, 0))


__all__ = [
    "AffineCertificate",
    "BaseLocusVerdict",
    "InfPlaceClass",
    "RamPlaceClass",
    "affine_common_zeros",
    "base_locus",
    "infinity_classes",
    "infinity_orders",
    "ord_at_infinity",
    "ord_at_ram",
    "pole_degree_bound",
    "precision_bound",
    "ram_orders",
    "ramification_classes",
    "valuation_pieces",
]
