"""
============================================================================
Half-Pass: Spectral-Galerkin Multiplicity Toolkit
============================================================================

MISSION - NEVER TO BE VIOLATED:
    Compute → Evaluate the half-Laplacian and its harmonic extension exactly
    Certify → Check every explicit constant before trusting a parameter window
    Locate  → Find both minima and the mountain-pass point numerically
    Report  → Write reproducible, bit-identical reports and grids

============================================================================
Harmonic Extension to the Half-Cylinder
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.4-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Spectral Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- CylinderField: functions on Omega x (0, inf) with symbolic y-dependence
    harmonic  w = sum b_j phi_j(x) exp(-sqrt(lambda_j) y)
    product   w = p(y) v(x)
- extend / trace / cylinder_energy / dirichlet_to_neumann
- Point evaluation on a finite window [0, Y], Y = 6 / sqrt(lambda_1)

Nothing here is stored on a grid in y; every y-integral is closed form
(exponential profiles) or a 1-D scipy quadrature (callable profiles).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy import integrate

from src.errors import DivergentProfileError, RangeError
from src.spectral.function_space import SpectralBasis, SpectralField
from src.spectral.spectral_basis import mode_table

# Module version
__version__ = "v1.0-1-1.4-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Window depth in units of 1/sqrt(lambda_1); tail below e^{-6}
WINDOW_DECAY = 6.0


class ProfileTag(str, Enum):
    """How a cylinder field depends on y."""

    HARMONIC = "harmonic"
    PRODUCT = "product"


# =============================================================================
# Profiles
# =============================================================================


@dataclass(frozen=True)
class ExponentialProfile:
    """p(y) = exp(-rate * y)."""

    rate: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.rate) or self.rate <= 0.0:
            raise DivergentProfileError(
                f"Exponential profile needs a positive rate, got {self.rate}",
                {"rate": self.rate},
            )

    @property
    def name(self) -> str:
        return f"exp(-{self.rate:g}y)"

    def __call__(self, y):
        return np.exp(-self.rate * np.asarray(y, dtype=float))

    def at_zero(self) -> float:
        return 1.0

    def slope_at_zero(self) -> float:
        return -self.rate

    def square_integral(self) -> float:
        """int_0^inf p² dy."""
        return 1.0 / (2.0 * self.rate)

    def slope_square_integral(self) -> float:
        """int_0^inf p'² dy."""
        return 0.5 * self.rate


@dataclass(frozen=True)
class CallableProfile:
    """An arbitrary elementary profile with its derivative."""

    function: Callable[[float], float]
    derivative: Callable[[float], float]
    name: str = "callable"

    def __call__(self, y):
        return np.vectorize(self.function, otypes=[float])(y)

    def at_zero(self) -> float:
        return float(self.function(0.0))

    def slope_at_zero(self) -> float:
        return float(self.derivative(0.0))

    def _half_line(self, integrand: Callable[[float], float], label: str) -> float:
        try:
            value, _ = integrate.quad(integrand, 0.0, np.inf, limit=200)
        except (OverflowError, ZeroDivisionError) as e:
            raise DivergentProfileError(f"{label} of {self.name} diverges: {e}")
        if not math.isfinite(value):
            raise DivergentProfileError(
                f"{label} of profile {self.name} is infinite", {"profile": self.name}
            )
        return float(value)

    def square_integral(self) -> float:
        return self._half_line(lambda y: self.function(y) ** 2, "int p²")

    def slope_square_integral(self) -> float:
        return self._half_line(lambda y: self.derivative(y) ** 2, "int p'²")


Profile = Union[ExponentialProfile, CallableProfile]


# =============================================================================
# Cylinder fields
# =============================================================================


@dataclass(frozen=True, eq=False)
class CylinderField:
    """
    A function on the half-cylinder over Omega.

    Attributes:
        basis: spectral basis of the x-dependence
        amplitudes: b_j; for product fields the coefficients of v (or of its
            projection, when v is not in the span)
        tag: harmonic or product
        profile: y-profile for product fields
        gradient_integral: int |grad v|² dx for product fields
        l2_integral: int v² dx for product fields
    """

    basis: SpectralBasis
    amplitudes: np.ndarray
    tag: ProfileTag
    profile: Optional[Profile] = None
    gradient_integral: Optional[float] = None
    l2_integral: Optional[float] = None

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=float).reshape(-1)
        if amps.shape[0] != self.basis.size or not np.all(np.isfinite(amps)):
            raise RangeError("Cylinder amplitudes must be finite and match the basis")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if self.tag is ProfileTag.PRODUCT and self.profile is None:
            raise RangeError("Product cylinder fields need a y-profile")

    @classmethod
    def harmonic(cls, u: SpectralField) -> "CylinderField":
        return cls(u.basis, u.coefficients, ProfileTag.HARMONIC)

    @classmethod
    def product(cls, v: SpectralField, profile: Profile) -> "CylinderField":
        """w = p(y) v(x) with v in the span; x-integrals from Parseval."""
        a = v.coefficients
        return cls(
            v.basis,
            a,
            ProfileTag.PRODUCT,
            profile=profile,
            gradient_integral=float(np.dot(a**2, v.basis.eigenvalues)),
            l2_integral=float(np.dot(a, a)),
        )

    @classmethod
    def product_from_integrals(
        cls,
        basis: SpectralBasis,
        amplitudes: np.ndarray,
        profile: Profile,
        gradient_integral: float,
        l2_integral: float,
    ) -> "CylinderField":
        """w = p(y) v(x) for v outside the span, with its exact x-integrals."""
        return cls(
            basis,
            amplitudes,
            ProfileTag.PRODUCT,
            profile=profile,
            gradient_integral=float(gradient_integral),
            l2_integral=float(l2_integral),
        )

    def evaluate(self, points, y) -> np.ndarray:
        """w(x, y); y is a scalar or one value per point."""
        table = mode_table(self.basis.pairs, points)
        y = np.asarray(y, dtype=float)
        if self.tag is ProfileTag.HARMONIC:
            decay = np.exp(-np.multiply.outer(self.basis.sqrt_eigenvalues, np.atleast_1d(y)))
            return np.sum(self.amplitudes[:, None] * decay * table, axis=0)
        return np.asarray(self.profile(y)) * (self.amplitudes @ table)


def extend(u: SpectralField) -> CylinderField:
    """Harmonic extension: mode j decays as exp(-sqrt(lambda_j) y)."""
    return CylinderField.harmonic(u)


def cylinder_energy(w: CylinderField) -> float:
    """
    int over the cylinder of |grad w|².

    harmonic: sum b_j² sqrt(lambda_j)
    product:  int|grad v|² int p² + int v² int p'²

    Raises:
        DivergentProfileError: the profile has infinite energy
    """
    if w.tag is ProfileTag.HARMONIC:
        return float(np.dot(w.amplitudes**2, w.basis.sqrt_eigenvalues))
    return float(
        w.gradient_integral * w.profile.square_integral()
        + w.l2_integral * w.profile.slope_square_integral()
    )


def trace(w: CylinderField) -> SpectralField:
    """w(x, 0) as a spectral field."""
    if w.tag is ProfileTag.HARMONIC:
        return SpectralField(w.basis, w.amplitudes)
    return SpectralField(w.basis, w.profile.at_zero() * w.amplitudes)


def dirichlet_to_neumann(w: CylinderField) -> SpectralField:
    """-d/dy w(x, 0) as a spectral field."""
    if w.tag is ProfileTag.HARMONIC:
        return SpectralField(w.basis, w.amplitudes * w.basis.sqrt_eigenvalues)
    return SpectralField(w.basis, -w.profile.slope_at_zero() * w.amplitudes)


def window_depth(basis: SpectralBasis) -> float:
    """Default window height Y = 6 / sqrt(lambda_1)."""
    return WINDOW_DECAY / float(basis.sqrt_eigenvalues[0])


def evaluate_window(
    w: CylinderField,
    points,
    levels: int = 25,
    depth: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Values of w at the given x-points on `levels` equispaced heights in [0, Y].

    Returns:
        (heights, values) with values of shape (levels, len(points))
    """
    if levels < 2:
        raise RangeError(f"Window needs at least 2 levels, got {levels}")
    top = window_depth(w.basis) if depth is None else float(depth)
    heights = np.linspace(0.0, top, levels)
    table = mode_table(w.basis.pairs, points)
    if w.tag is ProfileTag.HARMONIC:
        decay = np.exp(-np.outer(heights, w.basis.sqrt_eigenvalues))
        values = (decay * w.amplitudes) @ table
    else:
        values = np.outer(w.profile(heights), w.amplitudes @ table)
    return heights, values


__all__ = [
    "ProfileTag",
    "ExponentialProfile",
    "CallableProfile",
    "CylinderField",
    "extend",
    "cylinder_energy",
    "trace",
    "dirichlet_to_neumann",
    "window_depth",
    "evaluate_window",
]
