"""Exact computation of Gaussian maps on superelliptic curves y^n = f(x)."""
from __future__ import annotations

from .analysis import CurveAnalysis, analyze_curve
from .base_locus import base_locus, ord_at_infinity, ord_at_ram
from .canonical import canonical_basis, pencil_F, subsystem_K_minus_F
from .errors import (
    CurveError,
    CurveMismatchError,
    DependentSectionsError,
    InternalCheckError,
    NotAdjointError,
    NotInI2Error,
    RamifiedFiberError,
)
from .function_field import CurveModel, FFElement, KForm, PlaneModel
from .gaussian import QuadricForm, i2_basis, mu1_canonical, mu1_restricted, mu2, rank_mu2, wronskian
from .parsing import PolySyntaxError, parse_poly
from .quadrics import adjoint_quadric, psi, psi_image, quadric_rank

__version__ = "1.0.0"
