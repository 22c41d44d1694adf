from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from gaussmaps.errors import CurveError, CurveMismatchError
from gaussmaps.exact import RatFunc, RatMatrix, UniPoly, X, rank
from gaussmaps.function_field import CurveModel, KForm, PlaneModel, coordinatize

from conftest import xn_minus_1


def elt(curve, *coeffs):
    return curve.element([c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs])


def test_genus_and_invariants():
    c = CurveModel(3, xn_minus_1(10))
    assert (c.genus, c.d, c.m) == (9, 1, 10)
    assert CurveModel(2, xn_minus_1(8)).genus == 3
    assert CurveModel(5, UniPoly([-1, 0, 0, 0, 0, -1])).genus == 6


@pytest.mark.parametrize("n,f", [
    (2, X**2 * (X - 1) * (X + 2)),   # not squarefree
    (4, X**6 - 1),                    # gcd(n, m) = 2
    (1, X**5 - 1),
    (2, X**2 - 1),                    # degree too small
])
def test_invalid_models(n, f):
    with pytest.raises(CurveError):
        CurveModel(n, f)


def test_defining_relations(hyp3, trig7):
    y = hyp3.y()
    assert y * y == elt(hyp3, hyp3.f)
    y3 = trig7.y()
    assert y3 * (y3 * y3) == elt(trig7, trig7.f)
    inv = y.inverse()
    assert inv == elt(hyp3, 0, RatFunc(UniPoly.constant(1), hyp3.f))
    assert inv * inv == elt(hyp3, RatFunc(UniPoly.constant(1), hyp3.f))


def test_inverses(hyp3, trig7):
    for c in (hyp3, trig7):
        y = c.y()
        assert y.inverse() == y ** (c.n - 1) * elt(c, RatFunc(UniPoly.constant(1), c.f))
        assert c.one().inverse() == c.one()
    a = hyp3.x() + hyp3.y()
    expected = (hyp3.x() - hyp3.y()) * elt(hyp3, RatFunc(UniPoly.constant(1), X**2 - hyp3.f))
    assert a.inverse() == expected
    with pytest.raises(ZeroDivisionError):
        hyp3.zero().inverse()


def test_dy(hyp3):
    f = hyp3.f
    assert hyp3.y().derivative() == elt(hyp3, 0, RatFunc(f.derivative(), 2 * f))


def test_plane_model_agrees_with_superelliptic(trig7):
    plane = PlaneModel([-trig7.f, UniPoly(), UniPoly()])
    assert plane.dy == elt(plane, 0, trig7.dy.coeffs[1])
    a = elt(plane, X, 1, X**2)
    b = elt(trig7, X, 1, X**2)
    assert a.inverse().coeffs == b.inverse().coeffs


def test_mismatched_curves(hyp3, trig7):
    with pytest.raises(CurveMismatchError):
        hyp3.y() + trig7.y()


def test_coordinatize_examples(hyp3):
    one, x, y = hyp3.one(), hyp3.x(), hyp3.y()
    assert rank(coordinatize([KForm(e, 0) for e in (one, x, y)])) == 3
    z = KForm(x + y, 0)
    assert rank(coordinatize([z, -z])) == 1


small = st.integers(-3, 3)
ratfuncs = st.tuples(st.lists(small, max_size=3), st.lists(small, max_size=2)).map(
    lambda t: RatFunc(UniPoly(t[0]), UniPoly(t[1] + [1])))
CURVES = [CurveModel(2, xn_minus_1(8)), CurveModel(3, xn_minus_1(9)),
          PlaneModel([UniPoly([1, 0, 0, -1]), UniPoly([0, 1]), UniPoly()])]


@st.composite
def elements(draw, curve):
    return curve.element([draw(ratfuncs) for _ in range(curve.n)])


@st.composite
def triples(draw):
    c = CURVES[draw(st.integers(0, len(CURVES) - 1))]
    return c, draw(elements(c)), draw(elements(c)), draw(elements(c))


@given(triples())
def test_ring_axioms(t):
    _, a, b, c = t
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(triples())
def test_leibniz(t):
    _, a, b, _ = t
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(triples())
def test_inverse_property(t):
    c, a, _, _ = t
    if a.is_zero():
        return
    assert a * a.inverse() == c.one()


@given(triples(), st.integers(1, 5))
def test_rank_stable_under_rescaling(t, s):
    _, a, b, c = t
    forms = [KForm(e, 0) for e in (a, b, c) if not e.is_zero()]
    if not forms:
        return
    scaled = [KForm(forms[0].elt * s, 0)] + forms[1:]
    assert rank(coordinatize(forms)) == rank(coordinatize(scaled))
