from __future__ import annotations

from math import gcd

import pytest

from gaussmaps.base_locus import infinity_classes, ord_at_infinity, ord_at_ram, ramification_classes
from gaussmaps.canonical import (
    canonical_basis,
    differential,
    max_x_exponent,
    pencil_F,
    smallest_unramified_shift,
    subsystem_K_minus_F,
)
from gaussmaps.errors import RamifiedFiberError
from gaussmaps.exact import UniPoly, X, rank
from gaussmaps.function_field import CurveModel, KForm, coordinatize
from gaussmaps.quadrics import canonical_coordinates

from conftest import xn_minus_1


def test_hyperelliptic_basis(hyp3):
    B = canonical_basis(hyp3)
    assert B.indices == ((0, 1), (1, 1), (2, 1))
    y = hyp3.y()
    for a, w in enumerate(B.forms):
        assert w.elt == hyp3.element([X**a]) * y.inverse()


def test_trigonal_index_sets(trig7):
    B = canonical_basis(trig7)
    assert [i for i in B.indices if i[1] == 2] == [(a, 2) for a in range(5)]
    assert [i for i in B.indices if i[1] == 1] == [(0, 1), (1, 1)]
    c9 = CurveModel(3, xn_minus_1(10))
    assert (max_x_exponent(c9, 1), max_x_exponent(c9, 2)) == (2, 5)
    assert len(canonical_basis(c9)) == 9


def _admissible():
    for n in (2, 3, 4, 5):
        for m in range(3, 15):
            if gcd(n, m) in (1, n):
                c = CurveModel(n, xn_minus_1(m))
                if c.genus >= 1:
                    yield c


@pytest.mark.parametrize("curve", list(_admissible()), ids=repr)
def test_basis_size_rank_and_holomorphy(curve):
    B = canonical_basis(curve)
    assert len(B) == curve.genus
    assert rank(coordinatize(B.forms)) == curve.genus
    for w in B.forms:
        for cls in ramification_classes(curve):
            assert ord_at_ram(w, cls) >= 0
        for cls in infinity_classes(curve):
            assert ord_at_infinity(w, cls) >= 0


def test_non_holomorphic_neighbours_have_poles():
    c = CurveModel(3, xn_minus_1(10))
    for b in (1, 2):
        w = differential(c, max_x_exponent(c, b) + 1, b)
        assert ord_at_infinity(w, infinity_classes(c)[0]) < 0


def test_pencil(hyp3, trig7):
    for c in (hyp3, trig7):
        one, inv_x = pencil_F(c)
        assert one.weight == inv_x.weight == 0
        assert inv_x.elt * c.x() == c.one()


def test_pencil_requires_unramified_origin():
    c = CurveModel(2, X**8 - X)
    with pytest.raises(RamifiedFiberError) as info:
        pencil_F(c)
    assert info.value.shift == 2
    assert smallest_unramified_shift(X**8 - X) == 2


def test_subsystem_counts(hyp3, trig7, trig4):
    t = subsystem_K_minus_F(canonical_basis(hyp3))
    assert len(t) == 2 == hyp3.genus - 1
    assert len(subsystem_K_minus_F(canonical_basis(trig7))) == 5 == trig7.genus - 2
    t4 = subsystem_K_minus_F(canonical_basis(trig4))
    assert [w for w in t4] == [differential(trig4, 1, 2), differential(trig4, 2, 2)]


@pytest.mark.parametrize("curve", [CurveModel(2, xn_minus_1(12)), CurveModel(3, xn_minus_1(9)),
                                   CurveModel(3, xn_minus_1(10)), CurveModel(5, -xn_minus_1(5) - 2)])
def test_subsystem_closed_under_one_over_x(curve):
    B = canonical_basis(curve)
    _, inv_x = pencil_F(curve)
    for w in subsystem_K_minus_F(B):
        canonical_coordinates(curve, KForm(w.elt * inv_x.elt, 1))
