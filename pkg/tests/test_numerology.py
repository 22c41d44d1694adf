from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from gaussmaps.numerology import (
    ProductCurveSpec,
    bel_criterion,
    dim_i2_expected,
    genus_product,
    h0_kK,
    maroni_admissible,
    surj_possible,
    surjectivity_threshold,
    wahl_product_hypotheses,
)


def test_genus_product_examples():
    assert genus_product(ProductCurveSpec(2, 1, 9, 7)) == 71
    assert genus_product(ProductCurveSpec(0, 0, 1, 1)) == 0
    for d1, d2 in [(1, 1), (3, 5), (7, 2)]:
        assert genus_product(ProductCurveSpec(1, 1, d1, d2)) == 1 + d1 * d2


@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 12), st.integers(1, 12))
def test_genus_product_symmetry(g1, g2, d1, d2):
    assert genus_product(ProductCurveSpec(g1, g2, d1, d2)) == genus_product(ProductCurveSpec(g2, g1, d2, d1))


def test_h0_examples():
    assert h0_kK(7, 3) == 30
    assert h0_kK(7, 3) - 12 == 18
    assert h0_kK(3, 4) == 14
    assert h0_kK(2, 2) == 3
    with pytest.raises(ValueError):
        h0_kK(1, 2)


def test_dim_i2_examples():
    assert dim_i2_expected(4, False) == 1
    assert dim_i2_expected(6, False) == 6
    assert dim_i2_expected(3, True) == 1
    with pytest.raises(ValueError):
        dim_i2_expected(2, True)


@given(st.integers(4, 200))
def test_dim_i2_is_sym2_minus_h0_2k(g):
    assert dim_i2_expected(g, False) == g * (g + 1) // 2 - (3 * g - 3)


def test_surjectivity_threshold():
    assert surjectivity_threshold() == 18
    assert not surj_possible(17)
    assert surj_possible(18)


@given(st.integers(2, 50))
def test_bel_criterion_for_wahl_degrees(g):
    d = 2 * g + 5
    assert bel_criterion(g, 2 * g - 2 + d)


def test_wahl_hypotheses():
    assert wahl_product_hypotheses(ProductCurveSpec(2, 1, 9, 7))
    assert not wahl_product_hypotheses(ProductCurveSpec(2, 1, 8, 7))
    assert wahl_product_hypotheses(ProductCurveSpec(2, 3, 9, 11))


def test_wahl_rational_branch_bounds():
    # g2 = 0 needs d2 (g1 - 1) > 2 d1 >= 4 g1 + 10
    assert wahl_product_hypotheses(ProductCurveSpec(3, 0, 11, 12))
    assert not wahl_product_hypotheses(ProductCurveSpec(3, 0, 10, 12))
    assert not wahl_product_hypotheses(ProductCurveSpec(3, 0, 11, 11))


def test_maroni():
    assert maroni_admissible(7, 1) and maroni_admissible(7, 2)
    assert not maroni_admissible(7, 3)
    assert not maroni_admissible(12, 2)


def test_product_spec_validation():
    with pytest.raises(ValueError):
        ProductCurveSpec(-1, 0, 1, 1)
    with pytest.raises(ValueError):
        ProductCurveSpec(1, 1, 0, 1)
