"""Dense univariate polynomials over Q.

Coefficients are stored low degree first.  The zero polynomial has an empty
coefficient tuple and degree -1.
"""
from __future__ import annotations

from functools import reduce
from math import gcd as igcd
from math import isqrt
from typing import Iterable, Sequence

from .rational import ONE, ZERO, Q, to_q


class UniPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [to_q(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        # trusted path: entries already backend rationals
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(ONE))):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"UniPoly({self.render()!r})"

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly.constant(other)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-a for a in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = to_q(other)
            if s == 0:
                return UniPoly()
            return UniPoly._raw([a * s for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return UniPoly(), self
        inv = ONE / other.lc
        b = other.coeffs
        q = [ZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c != 0:
                for j in range(db + 1):
                    r[k + j] -= c * b[j]
        return UniPoly._raw(q), UniPoly._raw(r[:db])

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        """True if ``self`` divides ``other``."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([a * i for i, a in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = ZERO * x if not isinstance(x, UniPoly) else UniPoly()
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for a in reversed(self.coeffs):
            acc = acc * other + a
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = ONE / lc
        return UniPoly._raw([a * inv for a in self.coeffs])

    def reversed(self, degree: int | None = None) -> "UniPoly":
        """Coefficient reversal t^degree * p(1/t)."""
        degree = self.degree if degree is None else degree
        c = list(self.coeffs) + [ZERO] * (degree + 1 - len(self.coeffs))
        return UniPoly._raw(c[::-1])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly._raw([ZERO] * k + list(self.coeffs))

    def trailing_order(self) -> int:
        for i, a in enumerate(self.coeffs):
            if a != 0:
                return i
        raise ValueError("zero polynomial has no trailing term")

    # -- integer views -------------------------------------------------
    def primitive_int(self) -> list[int]:
        """Primitive integer polynomial proportional to self, positive lc."""
        if self.is_zero():
            return []
        den = reduce(lambda acc, a: acc * int(a.denominator) // igcd(acc, int(a.denominator)),
                     self.coeffs, 1)
        ints = [int(a.numerator) * (den // int(a.denominator)) for a in self.coeffs]
        cont = reduce(igcd, ints)
        if ints[-1] < 0:
            cont = -cont
        return [c // cont for c in ints]

    def render(self, var: str = "x") -> str:
        """Text form accepted by :func:`gaussmaps.parsing.parse_poly`."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = -a if a < 0 else a
            num, den = int(mag.numerator), int(mag.denominator)
            coef = str(num) if den == 1 else f"{num}/{den}"
            if k == 0:
                body = coef
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{coef}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = UniPoly.x()


# ---------------------------------------------------------------------------
# gcd machinery

def _int_divides(d: list[int], f: list[int]) -> bool:
    """Exact test d | f over Z[x] for primitive d (Gauss lemma)."""
    r = list(f)
    dd = len(d) - 1
    lc = d[-1]
    for k in range(len(r) - 1 - dd, -1, -1):
        c = r[k + dd]
        if c == 0:
            continue
        qk, rem = divmod(c, lc)
        if rem:
            return False
        for j in range(dd + 1):
            r[k + j] -= qk * d[j]
    return not any(r[:dd])


def _eval_int(f: list[int], x: int) -> int:
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def _heu_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """Heuristic gcd of primitive integer polynomials.

    Evaluation point kept above 2*min(|f|, |g|) + 2 so that a verified
    candidate is the true gcd.
    """
    norm_f = max(abs(a) for a in f)
    norm_g = max(abs(a) for a in g)
    xi = 2 * min(norm_f, norm_g) + 2
    for _ in range(8):
        h = igcd(_eval_int(f, xi), _eval_int(g, xi))
        cand = []
        half = xi // 2
        while h:
            c = h % xi
            if c > half:
                c -= xi
            cand.append(c)
            h = (h - c) // xi
        if cand:
            cont = reduce(igcd, cand)
            if cand[-1] < 0:
                cont = -cont
            cand = [c // cont for c in cand]
            if _int_divides(cand, f) and _int_divides(cand, g):
                return cand
        xi = 2 * xi + 1 + isqrt(xi) * 7
    return None


def _euclid_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q; gcd(0, 0) = 0."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return UniPoly.constant(1)
    if a == b:
        return a.monic()
    fi, gi = a.primitive_int(), b.primitive_int()
    # shared power of x handled separately keeps evaluation points coprime-friendly
    va = next(i for i, c in enumerate(fi) if c)
    vb = next(i for i, c in enumerate(gi) if c)
    v = min(va, vb)
    fi, gi = fi[va:], gi[vb:]
    if len(fi) == 1 or len(gi) == 1:
        core = [1]
    else:
        core = _heu_gcd(fi, gi)
        if core is None:  # pragma: no cover - heuristic exhausted
            core = list(_euclid_gcd(UniPoly(fi), UniPoly(gi)).primitive_int())
    return UniPoly([0] * v + core).monic()


def poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly()
    if a.monic() == b.monic():
        return a.monic()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.constant(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = ONE / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_inverse_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    """Inverse of a modulo m; raises ZeroDivisionError if not a unit."""
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return s % m


def is_squarefree(p: UniPoly) -> bool:
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree test")
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_constant():
        return UniPoly.constant(1) if not p.is_zero() else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def remove_factors_of(g: UniPoly, f: UniPoly) -> UniPoly:
    """Strip from g every irreducible factor it shares with f."""
    while g.degree > 0:
        h = poly_gcd(g, f)
        if h.degree == 0:
            break
        g = g.exact_div(h)
    return g


# ---------------------------------------------------------------------------
# bivariate resultant

def resultant_y(A: Sequence[UniPoly], B: Sequence[UniPoly]) -> UniPoly:
    """Resultant with respect to y of A(x, y) and B(x, y).

    Both arguments are coefficient lists in y (index = y-degree) with entries
    in Q[x].  B must be monic in y of positive degree.  The Sylvester
    determinant is evaluated by fraction-free elimination over Q[x].
    """
    A = [UniPoly._coerce(a) for a in A]
    B = [UniPoly._coerce(b) for b in B]
    while A and A[-1].is_zero():
        A.pop()
    while B and B[-1].is_zero():
        B.pop()
    if len(B) < 2 or B[-1] != UniPoly.constant(1):
        raise ValueError("second argument must be monic in y of positive degree")
    if not A:
        return UniPoly()
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    size = da + db
    rows = []
    for i in range(db):
        row = [UniPoly()] * size
        for k in range(da + 1):
            row[i + k] = A[da - k]
        rows.append(row)
    for i in range(da):
        row = [UniPoly()] * size
        for k in range(db + 1):
            row[i + k] = B[db - k]
        rows.append(row)
    return _poly_det(rows)


def _poly_det(M: list[list[UniPoly]]) -> UniPoly:
    n = len(M)
    M = [list(r) for r in M]
    sign = 1
    prev = UniPoly.constant(1)
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if not M[r][k].is_zero()), None)
        if piv is None:
            return UniPoly()
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pk - M[i][k] * M[k][j]).exact_div(prev)
            M[i][k] = UniPoly()
        prev = pk
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


__all__ = [
    "UniPoly",
    "X",
    "is_squarefree",
    "poly_gcd",
    "poly_inverse_mod",
    "poly_lcm",
    "poly_xgcd",
    "remove_factors_of",
    "resultant_y",
    "squarefree_part",
]
