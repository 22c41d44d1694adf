"""Holomorphic differentials on y^n = f(x), the pencil cut out by the fiber
of x over 0, and the subsystem of differentials vanishing on that fiber."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import RamifiedFiberError
from .exact import RatFunc, UniPoly
from .function_field import CurveModel, FFElement, KForm


@dataclass(frozen=True, eq=False)
class CanonicalBasis:
    """Basis x^a dx / y^b of H^0(K), ordered by b then a.

    ``indices[k]`` is the (a, b) pair of ``forms[k]``.  Quadric matrices are
    always written in this ordering.
    """

    curve: CurveModel
    forms: tuple[KForm, ...]
    indices: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __getitem__(self, k: int) -> KForm:
        return self.forms[k]

    @cached_property
    def derivatives(self) -> tuple[tuple[FFElement, FFElement, FFElement], ...]:
        """(f_i, f_i', f_i'') for each basis form f_i dx."""
        out = []
        for w in self.forms:
            f0 = w.elt
            f1 = f0.derivative()
            out.append((f0, f1, f1.derivative()))
        return tuple(out)


def max_x_exponent(curve: CurveModel, b: int) -> int:
    """Largest a with x^a dx / y^b holomorphic at infinity (-1 if none)."""
    n, m = curve.n, curve.m
    if curve.d == n:
        return b * (m // n) - 2
    return (b * m - 1) // n - 1


def differential(curve: CurveModel, a: int, b: int) -> KForm:
    """x^a dx / y^b stored as x^a y^(n-b) / f."""
    n = curve.n
    coeffs = [RatFunc.zero()] * n
    coeffs[(n - b) % n] = RatFunc(UniPoly.monomial(a), curve.f) if b > 0 else RatFunc(UniPoly.monomial(a))
    return KForm(FFElement(curve, tuple(coeffs)), 1)


def canonical_basis(curve: CurveModel) -> CanonicalBasis:
    forms, indices = [], []
    for b in range(1, curve.n):
        for a in range(max_x_exponent(curve, b) + 1):
            forms.append(differential(curve, a, b))
            indices.append((a, b))
    if len(forms) != curve.genus:  # pragma: no cover - guarded by the genus formula
        raise AssertionError(f"basis has {len(forms)} forms but genus is {curve.genus}")
    return CanonicalBasis(curve, tuple(forms), tuple(indices))


def smallest_unramified_shift(f: UniPoly) -> int:
    t = 0
    while f(t) == 0:
        t += 1
    return t


def _require_unramified_origin(curve: CurveModel) -> None:
    if curve.f(0) == 0:
        t = smallest_unramified_shift(curve.f)
        raise RamifiedFiberError(
            f"f(0) = 0: the fiber over x = 0 is ramified; substitute x -> x + {t}", t)


def pencil_F(curve: CurveModel) -> tuple[KForm, KForm]:
    """Sections (1, 1/x) of the line bundle of the fiber over x = 0."""
    _require_unramified_origin(curve)
    one = KForm(curve.one(), 0)
    inv_x = KForm(curve.element([RatFunc(UniPoly.constant(1), UniPoly.x())]), 0)
    return one, inv_x


def subsystem_K_minus_F(basis: CanonicalBasis) -> tuple[KForm, ...]:
    """Basis forms with a >= 1, i.e. those vanishing on the fiber over 0."""
    _require_unramified_origin(basis.curve)
    return tuple(w for w, (a, _) in zip(basis.forms, basis.indices) if a >= 1)


__all__ = [
    "CanonicalBasis",
    "canonical_basis",
    "differential",
    "max_x_exponent",
    "pencil_F",
    "smallest_unramified_shift",
    "subsystem_K_minus_F",
]
