"""Per-curve pipeline: every rank, check and verdict the reports need."""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field

from .base_locus import RamPlaceClass, base_locus, ord_at_ram, ramification_classes
from .canonical import smallest_unramified_shift, subsystem_K_minus_F
from .exact import X, RatMatrix, UniPoly, is_squarefree, poly_gcd, modular_rank, rank
from .exact.primes import random_prime
from .function_field import CurveModel, coordinatize
from .gaussian import basis_of, i2_basis, mu1_canonical, mu1_restricted, products_matrix, rank_mu2
from .numerology import dim_i2_expected, h0_kK
from .quadrics import factorization_sides, psi_pair, adjoint_quadric, quadric_rank


@dataclass
class CurveAnalysis:
    n: int
    f: str
    label: str | None
    genus: int
    d: int
    m: int
    dim_i2: int
    dim_i2_expected: int
    rank_mu1K: int
    corank_mu1K: int
    rank_mu1L: int | None
    unramified_shift: int | None  # x -> x + shift used for the pencil, if any
    rank_mu2: int
    mu2_dual_checks: int
    mu2_ram_min_orders: list
    psi_count: int | None = None
    psi_rank: int | None = None
    psi_max_quadric_rank: int | None = None
    factorization_checks_passed: int | None = None
    factorization_total: int | None = None
    psi_mu2_nonzero: bool | None = None
    base_locus: dict | None = None
    modular_checks: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    @property
    def lower_bound_ok(self) -> bool:
        return self.rank_mu2 >= self.genus - 3

    def as_dict(self) -> dict:
        return asdict(self)


def ram_place_classes(curve: CurveModel, moduli: list[UniPoly] | None) -> list[RamPlaceClass]:
    """User moduli, validated, plus one class for whatever part of f they leave out."""
    if not moduli:
        return ramification_classes(curve)
    classes = [RamPlaceClass(p) for p in moduli]
    covered = UniPoly.constant(1)
    for cls in classes:
        cls.check(curve)
        if poly_gcd(covered, cls.p).degree > 0:
            raise ValueError("ramification moduli must be pairwise coprime")
        covered = covered * cls.p
    rest = curve.f.monic().exact_div(covered)
    if rest.degree > 0:
        classes.append(RamPlaceClass(rest))
    return classes


def _modular_agreement(name: str, M: RatMatrix, exact: int, rng: random.Random, count: int) -> dict:
    mods = []
    while len(mods) < count:
        p = random_prime(30, rng)
        try:
            mods.append(modular_rank(M, p))
        except ValueError:
            continue  # p divides a denominator; draw another prime
    return {"matrix": name, "exact": exact, "modular": mods, "agree": all(r == exact for r in mods)}


def analyze_curve(curve: CurveModel, *, factorization: bool = True, with_base_locus: bool = True,
                  ram_moduli: list[UniPoly] | None = None, modular_primes: int = 0,
                  seed: int = 0) -> CurveAnalysis:
    """Run the whole pipeline on one superelliptic curve."""
    timings = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round((now - clock) * 1000)
        clock = now

    g = curve.genus
    classes = ram_place_classes(curve, ram_moduli)
    basis = basis_of(curve)
    P = products_matrix(basis)
    quadrics = i2_basis(curve)
    lap("i2")
    m1 = mu1_canonical(curve)
    # the pencil (1, 1/x) needs an unramified fiber over x = 0; move one there
    shift = None
    pencil_curve = curve
    if curve.f(0) == 0:
        shift = smallest_unramified_shift(curve.f)
        pencil_curve = CurveModel(curve.n, curve.f.compose(X + shift), curve.label)
    m1l = mu1_restricted(pencil_curve)
    rank_l = m1l.rank
    lap("mu1")
    m2 = rank_mu2(curve, quadrics)
    lap("mu2")

    ram_min = []
    for cls in classes:
        orders = [ord_at_ram(w, cls) for w in m2.images if not w.is_zero()]
        ram_min.append({"modulus": cls.p.render(), "min_order": min(orders) if orders else None})

    result = CurveAnalysis(
        n=curve.n, f=curve.f.render(), label=curve.label, genus=g, d=curve.d, m=curve.m,
        dim_i2=len(quadrics), dim_i2_expected=dim_i2_expected(g, curve.n == 2) if g >= 3 else 0,
        rank_mu1K=m1.rank, corank_mu1K=h0_kK(g, 3) - m1.rank if g >= 2 else 0,
        rank_mu1L=rank_l, unramified_shift=shift, rank_mu2=m2.rank,
        mu2_dual_checks=len(quadrics), mu2_ram_min_orders=ram_min,
    )
    lap("valuations")

    psi_vectors = []
    if factorization:
        r = len(subsystem_K_minus_F(basis_of(pencil_curve)))
        passed = total = 0
        nonzero = True
        qranks = []
        for i in range(r):
            for j in range(i + 1, r):
                pair = psi_pair(pencil_curve, i, j)
                Q = adjoint_quadric(pair)
                psi_vectors.append(Q.pair_vector())
                qranks.append(quadric_rank(Q))
                lhs, rhs = factorization_sides(pair)
                total += 1
                passed += lhs == rhs
                nonzero = nonzero and not lhs.is_zero()
        result.psi_count = total
        result.psi_rank = rank(RatMatrix(psi_vectors, len(P.rows))) if psi_vectors else 0
        result.psi_max_quadric_rank = max(qranks, default=0)
        result.factorization_checks_passed = passed
        result.factorization_total = total
        result.psi_mu2_nonzero = nonzero
        lap("psi")

    if with_base_locus and any(not w.is_zero() for w in m2.images):
        result.base_locus = base_locus(m2.images, classes).summary()
        lap("base_locus")

    if modular_primes:
        rng = random.Random(seed)
        mats = [("products", P), ("mu1_K", coordinatize(m1.images))]
        if m1l is not None:
            mats.append(("mu1_L", coordinatize(m1l.images)))
        nz = [w for w in m2.images if not w.is_zero()]
        if nz:
            mats.append(("mu2", coordinatize(nz)))
        if psi_vectors:
            mats.append(("psi", RatMatrix(psi_vectors, len(P.rows))))
        for name, M in mats:
            result.modular_checks.append(_modular_agreement(name, M, rank(M), rng, modular_primes))
        lap("modular")

    result.timings_ms = timings
    return result


def random_squarefree(degree: int, rng: random.Random, lo: int = -5, hi: int = 5) -> UniPoly:
    """Random squarefree f of exact degree with f(0) != 0."""
    while True:
        c = [rng.randint(lo, hi) for _ in range(degree + 1)]
        if c[-1] == 0 or c[0] == 0:
            continue
        f = UniPoly(c)
        if is_squarefree(f):
            return f


__all__ = ["CurveAnalysis", "analyze_curve", "ram_place_classes", "random_squarefree"]
