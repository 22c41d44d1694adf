"""Rational functions in one variable, kept in lowest terms with monic denominator."""
from __future__ import annotations

from typing import Iterable, Sequence

from .poly import UniPoly, poly_gcd
from .rational import ONE, Q, to_q

_ONE_POLY = UniPoly.constant(1)


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = num if isinstance(num, UniPoly) else UniPoly.constant(num)
        if den is None:
            den = _ONE_POLY
            reduced = True
        elif not isinstance(den, UniPoly):
            den = UniPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = UniPoly(), _ONE_POLY
        elif not reduced and not den.is_constant():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = ONE / lc
            num, den = num * inv, den * inv
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(UniPoly())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(_ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def degree(self) -> int:
        """deg num - deg den (valuation at infinity with opposite sign)."""
        if self.is_zero():
            raise ValueError("zero rational function has no degree")
        return self.num.degree - self.den.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            other = RatFunc._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RatFunc({self.num.render()!r})"
        return f"RatFunc(({self.num.render()}) / ({self.den.render()}))"

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        return RatFunc(UniPoly.constant(other))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __add__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        g = poly_gcd(b, d)
        if g.degree == 0:
            return RatFunc(a * d + c * b, b * d, reduced=True)
        bq, dq = b.exact_div(g), d.exact_div(g)
        num = a * dq + c * bq
        h = poly_gcd(num, g)
        if h.degree > 0:
            num, g = num.exact_div(h), g.exact_div(h)
        return RatFunc(num, bq * dq * g, reduced=True)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc._coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if not isinstance(other, (RatFunc, UniPoly)):
            s = to_q(other)
            if s == 0:
                return RatFunc.zero()
            return RatFunc(self.num * s, self.den, reduced=True)
        other = RatFunc._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 else _ONE_POLY
        g2 = poly_gcd(c, b) if b.degree > 0 else _ONE_POLY
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RatFunc(a * c, b * d, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc._coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc._coerce(other) * self.inverse()

    def derivative(self) -> "RatFunc":
        if self.is_polynomial():
            return RatFunc(self.num.derivative(), self.den, reduced=True)
        # (n/d)' = (n' d - n d') / d^2; only gcd(d, d') can survive
        n, d = self.num, self.den
        dd = d.derivative()
        g = poly_gcd(d, dd)
        dg = d.exact_div(g)
        num = n.derivative() * dg - n * dd.exact_div(g)
        return RatFunc(num, dg * d)

    def __call__(self, x):
        return self.num(x) / self.den(x)


def common_denominator(items: Iterable[RatFunc]) -> UniPoly:
    """Monic least common multiple of the denominators."""
    lcm = _ONE_POLY
    seen = set()
    for r in items:
        d = r.den
        if d.degree == 0 or d in seen:
            continue
        seen.add(d)
        if lcm.degree == 0:
            lcm = d
            continue
        if d.divides(lcm):
            continue
        g = poly_gcd(lcm, d)
        lcm = lcm * d.exact_div(g)
    return lcm


def lincomb(scalars: Sequence, items: Sequence[RatFunc]) -> RatFunc:
    """sum(c * r) over a single common denominator, reduced once."""
    pairs = [(to_q(c), r) for c, r in zip(scalars, items) if c != 0 and not r.is_zero()]
    if not pairs:
        return RatFunc.zero()
    if len(pairs) == 1:
        c, r = pairs[0]
        return r * c
    D = common_denominator(r for _, r in pairs)
    num = UniPoly()
    for c, r in pairs:
        if r.den == D:
            num = num + r.num * c
        else:
            num = num + r.num * D.exact_div(r.den) * c
    return RatFunc(num, D)


__all__ = ["RatFunc", "common_denominator", "lincomb"]
