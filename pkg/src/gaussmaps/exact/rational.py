"""Scalar backend for exact rational arithmetic.

``gmpy2.mpq`` is used when available; the stdlib ``Fraction`` is the fallback.
Both normalize to lowest terms with a positive denominator.
"""
from __future__ import annotations

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Q

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

    BACKEND = "fractions"

ZERO = Q(0)
ONE = Q(1)


def to_q(value) -> Q:
    """Coerce an int, Fraction, mpq or "p/q" string to the backend rational."""
    if isinstance(value, str):
        num, _, den = value.strip().partition("/")
        return Q(int(num), int(den)) if den else Q(int(num))
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Q(int(value.numerator), int(value.denominator))
    return Q(value)


def q_str(value) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    value = to_q(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"
