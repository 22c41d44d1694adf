"""Closed-form dimension counts and hypothesis predicates."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ProductCurveSpec:
    """Curve of bidegree (d1, d2) on the product of curves of genus g1, g2."""

    g1: int
    g2: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.g1 < 0 or self.g2 < 0:
            raise ValueError("factor genera must be nonnegative")
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("bidegrees must be positive")


def genus_product(spec: ProductCurveSpec) -> int:
    """Genus from adjunction on C1 x C2."""
    return 1 + (spec.g2 - 1) * spec.d1 + (spec.g1 - 1) * spec.d2 + spec.d1 * spec.d2


def h0_kK(g: int, k: int) -> int:
    """h^0(kK) = (2k - 1)(g - 1) for k >= 2 (Riemann-Roch)."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if k < 2:
        raise ValueError("k must be at least 2")
    return (2 * k - 1) * (g - 1)


def dim_i2_expected(g: int, hyperelliptic: bool) -> int:
    if g < 3:
        raise ValueError("genus must be at least 3")
    if hyperelliptic:
        return (g - 1) * (g - 2) // 2
    return (g - 2) * (g - 3) // 2


def surj_possible(g: int) -> bool:
    """dim I_2 >= h^0(4K) for a non-hyperelliptic curve of genus g."""
    return g >= 3 and dim_i2_expected(g, False) >= h0_kK(g, 4)


def surjectivity_threshold() -> int:
    g = 3
    while not surj_possible(g):
        g += 1
    return g


def bel_criterion(g: int, l: int) -> bool:
    """Degree condition 2l >= 3(2g + 2) + 2g - 1 for surjectivity of mu_1, mu_2."""
    return 2 * l >= 3 * (2 * g + 2) + 2 * g - 1


def wahl_product_hypotheses(spec: ProductCurveSpec) -> bool:
    g1, g2, d1, d2 = spec.g1, spec.g2, spec.d1, spec.d2
    both_high = g1 >= 2 and g2 >= 2 and d1 >= 2 * g1 + 5 and d2 >= 2 * g2 + 5
    elliptic = g1 >= 2 and g2 == 1 and d1 >= 2 * g1 + 5 and d2 >= 7
    rational = g2 == 0 and d2 >= 7 and d2 * (g1 - 1) > 2 * d1 >= 4 * g1 + 10
    return both_high or elliptic or rational


def maroni_admissible(g: int, k: int) -> bool:
    """(g - 4)/3 <= k <= (g - 2)/2 for the scroll invariant of a trigonal curve."""
    return 3 * k >= g - 4 and 2 * k <= g - 2


__all__ = [
    "ProductCurveSpec",
    "bel_criterion",
    "dim_i2_expected",
    "genus_product",
    "h0_kK",
    "maroni_admissible",
    "surj_possible",
    "surjectivity_threshold",
    "wahl_product_hypotheses",
]
