"""Exception types shared across the package."""
from __future__ import annotations


class CurveError(ValueError):
    """Invalid curve model (degree, squarefreeness, unsupported (n, m))."""


class CurveMismatchError(ValueError):
    pass


class RamifiedFiberError(ValueError):
    """The fiber of x over 0 meets a root of f.

    ``shift`` is the smallest nonnegative integer t with f(t) != 0; the model
    can be re-entered in the coordinate x -> x + t.
    """

    def __init__(self, message: str, shift: int):
        super().__init__(message)
        self.shift = shift


class DependentSectionsError(ValueError):
    pass


class NotInI2Error(ValueError):
    """Quadric fails the membership identity sum a_ij f_i f_j = 0."""


class NotAdjointError(ValueError):
    """A product u_a * w_b is not in the span of the canonical basis."""


class InternalCheckError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
