"""Arithmetic in Q(x)[y]/(E) for E monic in y, with the superelliptic case
E = y^n - f(x) as the main citizen.

Elements are kept in y-normal form: a polynomial in y of degree < n whose
coefficients are reduced rational functions of x.  Differentiation is d/dx
with y treated as an implicit function of x.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd as igcd
from typing import Sequence

from .errors import CurveError, CurveMismatchError
from .exact import (
    RatFunc,
    RatMatrix,
    UniPoly,
    common_denominator,
    is_squarefree,
    lincomb,
)
from .exact.rational import to_q


class FunctionField:
    """Q(x)[y] modulo a monic polynomial of degree n in y.

    ``tail`` holds the rational functions t_0..t_{n-1} with
    y^n = t_0 + t_1 y + ... + t_{n-1} y^{n-1}.
    """

    def __init__(self, n: int, tail: Sequence[RatFunc]):
        if n < 2:
            raise CurveError("degree in y must be at least 2")
        if len(tail) != n:
            raise CurveError("reduction rule must have n entries")
        self.n = n
        self.tail = tuple(RatFunc._coerce(t) for t in tail)

    # -- element constructors ------------------------------------------
    def element(self, coeffs: Sequence) -> "FFElement":
        coeffs = [RatFunc._coerce(c) for c in coeffs]
        if len(coeffs) > self.n:
            return self._reduce(coeffs)
        coeffs += [RatFunc.zero()] * (self.n - len(coeffs))
        return FFElement(self, tuple(coeffs))

    def zero(self) -> "FFElement":
        return self.element([])

    def one(self) -> "FFElement":
        return self.element([RatFunc.one()])

    def x(self) -> "FFElement":
        return self.element([RatFunc(UniPoly.x())])

    def y(self) -> "FFElement":
        return self.element([RatFunc.zero(), RatFunc.one()])

    def monomial(self, a: int, b: int, scale=1) -> "FFElement":
        """scale * x^a * y^b for any integers a, b (negative allowed)."""
        xa = RatFunc(UniPoly.monomial(a, scale)) if a >= 0 else RatFunc(
            UniPoly.constant(scale), UniPoly.monomial(-a))
        e = self.element([xa])
        if b >= 0:
            return e * self.y_power(b)
        return e * self.y_power(-b).inverse()

    def y_power(self, b: int) -> "FFElement":
        result = self.one()
        y = self.y()
        for _ in range(b):
            result = result * y
        return result

    def _reduce(self, coeffs: list[RatFunc]) -> "FFElement":
        n = self.n
        coeffs = list(coeffs)
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if c.is_zero():
                continue
            for b, t in enumerate(self.tail):
                if not t.is_zero():
                    coeffs[k - n + b] = coeffs[k - n + b] + c * t
        coeffs = coeffs[:n] + [RatFunc.zero()] * (n - min(n, len(coeffs)))
        return FFElement(self, tuple(coeffs[:n]))

    # -- derivative of y ----------------------------------------------
    @cached_property
    def dy(self) -> "FFElement":
        """dy/dx = -E_x / E_y."""
        n = self.n
        ex = self.element([-t.derivative() for t in self.tail])
        ey_coeffs = [RatFunc.zero()] * n
        ey_coeffs[n - 1] = RatFunc(UniPoly.constant(n))
        for b in range(1, n):
            ey_coeffs[b - 1] = ey_coeffs[b - 1] - self.tail[b] * b
        ey = self.element(ey_coeffs)
        return -(ex * ey.inverse())

    def same_as(self, other: "FunctionField") -> bool:
        return self is other or (self.n == other.n and self.tail == other.tail)


class CurveModel(FunctionField):
    """Superelliptic model y^n = f(x) with f squarefree."""

    def __init__(self, n: int, f: UniPoly, label: str | None = None):
        if not isinstance(f, UniPoly):
            f = UniPoly(f)
        if n < 2:
            raise CurveError("cover degree n must be at least 2")
        if f.is_zero():
            raise CurveError("f must be nonzero")
        if not is_squarefree(f):
            raise CurveError(f"f = {f.render()} is not squarefree")
        m = f.degree
        if m < 3:
            raise CurveError("deg f must be at least 3")
        d = igcd(n, m)
        if d not in (1, n):
            raise CurveError(f"gcd(n, deg f) = {d} is neither 1 nor n; model not supported")
        twice_genus = (n - 1) * (m - 1) + 1 - d
        if twice_genus < 0 or twice_genus % 2:
            raise CurveError("genus formula does not give a nonnegative integer")
        super().__init__(n, [RatFunc(f)] + [RatFunc.zero()] * (n - 1))
        self.f = f
        self.m = m
        self.c = f.lc
        self.d = d
        self.genus = twice_genus // 2
        self.label = label

    def __repr__(self) -> str:
        return f"CurveModel(y^{self.n} = {self.f.render()}, genus={self.genus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CurveModel) and self.n == other.n and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.n, self.f))

    @cached_property
    def _dlog_f(self) -> RatFunc:
        # f'/(n f): the coefficient of y in dy/dx
        return RatFunc(self.f.derivative(), self.f * self.n)

    @cached_property
    def dy(self) -> "FFElement":
        return self.element([RatFunc.zero(), self._dlog_f])

    def _reduce(self, coeffs: list[RatFunc]) -> "FFElement":
        n = self.n
        out = list(coeffs) + [RatFunc.zero()] * max(0, n - len(coeffs))
        fr = self.tail[0]
        for k in range(len(out) - 1, n - 1, -1):
            c = out[k]
            if not c.is_zero():
                out[k - n] = out[k - n] + c * fr
        return FFElement(self, tuple(out[:n]))


class PlaneModel(FunctionField):
    """General model E(x, y) = y^n + a_{n-1}(x) y^{n-1} + ... + a_0(x)."""

    def __init__(self, lower: Sequence[UniPoly], label: str | None = None):
        n = len(lower)
        super().__init__(n, [-RatFunc._coerce(a) for a in lower])
        self.lower = tuple(lower)
        self.label = label

    def __repr__(self) -> str:
        return f"PlaneModel(n={self.n})"


class FFElement:
    """sum_b coeffs[b](x) * y^b in a fixed function field."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FunctionField, coeffs: tuple[RatFunc, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    @property
    def curve(self) -> FunctionField:
        return self.field

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: "FFElement") -> None:
        if not self.field.same_as(other.field):
            raise CurveMismatchError("elements live on different curves")

    def _lift(self, other) -> "FFElement":
        if isinstance(other, FFElement):
            self._check(other)
            return other
        return self.field.element([RatFunc._coerce(other)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FFElement):
            other = self._lift(other)
        return self.field.same_as(other.field) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        terms = [f"({c!r})*y^{b}" for b, c in enumerate(self.coeffs) if not c.is_zero()]
        return "FFElement(" + (" + ".join(terms) if terms else "0") + ")"

    def __add__(self, other) -> "FFElement":
        other = self._lift(other)
        return FFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FFElement":
        return FFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "FFElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "FFElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "FFElement":
        if not isinstance(other, (FFElement, RatFunc, UniPoly)):
            s = to_q(other)
            return FFElement(self.field, tuple(a * s for a in self.coeffs))
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        prod = [RatFunc.zero()] * (2 * self.field.n - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if not bj.is_zero():
                    prod[i + j] = prod[i + j] + ai * bj
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FFElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "FFElement":
        return ff_inv(self)

    def __truediv__(self, other) -> "FFElement":
        return self * self._lift(other).inverse()

    def derivative(self) -> "FFElement":
        return ff_derive(self)

    def denominators(self) -> list[UniPoly]:
        return [c.den for c in self.coeffs if not c.is_zero()]


def ff_mul(a: FFElement, b: FFElement) -> FFElement:
    """Product in the function field."""
    return a * b


def _ypoly_trim(p: list[RatFunc]) -> list[RatFunc]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _ypoly_divmod(a: list[RatFunc], b: list[RatFunc]):
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    q = [RatFunc.zero()] * max(0, len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv
        q[k] = c
        if not c.is_zero():
            for j in range(db + 1):
                a[k + j] = a[k + j] - c * b[j]
    return _ypoly_trim(q), _ypoly_trim(a[:db])


def _ypoly_mul(a: list[RatFunc], b: list[RatFunc]) -> list[RatFunc]:
    if not a or not b:
        return []
    out = [RatFunc.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return _ypoly_trim(out)


def _ypoly_sub(a: list[RatFunc], b: list[RatFunc]) -> list[RatFunc]:
    n = max(len(a), len(b))
    a = a + [RatFunc.zero()] * (n - len(a))
    b = b + [RatFunc.zero()] * (n - len(b))
    return _ypoly_trim([x - y for x, y in zip(a, b)])


def ff_inv(a: FFElement) -> FFElement:
    """Multiplicative inverse via extended Euclid in Q(x)[y] modulo E."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero function-field element")
    field = a.field
    nz = [b for b, c in enumerate(a.coeffs) if not c.is_zero()]
    if len(nz) == 1 and isinstance(field, CurveModel):
        # r y^b -> y^(n-b) / (r f)
        b = nz[0]
        r = a.coeffs[b]
        if b == 0:
            return field.element([r.inverse()])
        coeffs = [RatFunc.zero()] * field.n
        coeffs[field.n - b] = (r * field.tail[0]).inverse()
        return FFElement(field, tuple(coeffs))
    E = [-t for t in field.tail] + [RatFunc.one()]
    r0, r1 = E, _ypoly_trim(list(a.coeffs))
    s0, s1 = [], [RatFunc.one()]
    while len(r1) > 1:
        q, r = _ypoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _ypoly_sub(s0, _ypoly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is a zero divisor (modulus not irreducible)")
    inv = r1[0].inverse()
    return field.element([c * inv for c in s1])


def ff_derive(a: FFElement) -> FFElement:
    """Formal d/dx."""
    field = a.field
    if isinstance(field, CurveModel):
        # d(r y^b) = (r' + b r f'/(n f)) y^b
        dl = field._dlog_f
        out = []
        for b, r in enumerate(a.coeffs):
            if r.is_zero():
                out.append(r)
            elif b == 0:
                out.append(r.derivative())
            else:
                out.append(lincomb([1, b], [r.derivative(), r * dl]))
        return FFElement(field, tuple(out))
    result = field.element([r.derivative() for r in a.coeffs])
    dy = field.dy
    ypow = field.one()
    for b in range(1, field.n):
        r = a.coeffs[b]
        if not r.is_zero():
            result = result + (ypow * dy) * (r * b)
        ypow = ypow * field.y()
    return result


def ff_lincomb(scalars: Sequence, elements: Sequence[FFElement]) -> FFElement:
    """sum c_k e_k with one common denominator per y-power."""
    if not elements:
        raise ValueError("empty linear combination")
    field = elements[0].field
    for e in elements[1:]:
        elements[0]._check(e)
    coeffs = tuple(
        lincomb(scalars, [e.coeffs[b] for e in elements]) for b in range(field.n))
    return FFElement(field, coeffs)


@dataclass(frozen=True, eq=False)
class KForm:
    """elt * (dx)^weight."""

    elt: FFElement
    weight: int

    def __post_init__(self):
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")

    @property
    def curve(self) -> FunctionField:
        return self.elt.field

    def is_zero(self) -> bool:
        return self.elt.is_zero()

    def __mul__(self, other) -> "KForm":
        if isinstance(other, KForm):
            return KForm(self.elt * other.elt, self.weight + other.weight)
        return KForm(self.elt * other, self.weight)

    __rmul__ = __mul__

    def __add__(self, other: "KForm") -> "KForm":
        if other.weight != self.weight:
            raise ValueError("cannot add forms of different weight")
        return KForm(self.elt + other.elt, self.weight)

    def __neg__(self) -> "KForm":
        return KForm(-self.elt, self.weight)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, KForm) and self.weight == other.weight and self.elt == other.elt

    def __hash__(self) -> int:
        return hash((self.elt, self.weight))


def coordinate_frame(elements: Sequence[KForm]) -> tuple[RatMatrix, list[tuple[int, int]], UniPoly]:
    """Coordinates of ``elements`` over the monomials x^a y^b.

    Returns the matrix (rows = elements), the (b, a) label of each column and
    the common denominator D(x) that was cleared.
    """
    if not elements:
        return RatMatrix([], 0), [], UniPoly.constant(1)
    first = elements[0]
    for e in elements[1:]:
        first.elt._check(e.elt)
        if e.weight != first.weight:
            raise ValueError("coordinatize needs forms of equal weight")
    D = common_denominator(c for e in elements for c in e.elt.coeffs if not c.is_zero())
    cleared = []
    for e in elements:
        row = {}
        for b, c in enumerate(e.elt.coeffs):
            if c.is_zero():
                continue
            poly = c.num if c.den == D else c.num * D.exact_div(c.den)
            for a, v in enumerate(poly.coeffs):
                if v != 0:
                    row[(b, a)] = v
        cleared.append(row)
    labels = sorted({k for row in cleared for k in row})
    index = {k: i for i, k in enumerate(labels)}
    rows = []
    for row in cleared:
        vec = [0] * len(labels)
        for k, v in row.items():
            vec[index[k]] = v
        rows.append(vec)
    return RatMatrix(rows, len(labels)), labels, D


def coordinatize(elements: Sequence[KForm]) -> RatMatrix:
    """Coordinate matrix of equal-weight forms; row rank = span dimension."""
    return coordinate_frame(elements)[0]


__all__ = [
    "CurveModel",
    "FFElement",
    "FunctionField",
    "KForm",
    "PlaneModel",
    "coordinate_frame",
    "coordinatize",
    "ff_derive",
    "ff_inv",
    "ff_lincomb",
    "ff_mul",
]
