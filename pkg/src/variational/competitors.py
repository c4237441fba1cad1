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
Truncated-Cone Competitors
----------------------------------------------------------------------------
FILE VERSION: v1.0-2-2.3-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 2 - Variational Core
CLEAN ARCHITECTURE: Compliant
============================================================================

The competitor is the truncated cone

    omega(x) = rho                              |x - x0| <= tau/2
             = 2 rho / tau (tau - |x - x0|)     tau/2 < |x - x0| < tau
             = 0                                otherwise

and its lift w(x, y) = exp(-y/2) omega(x) to the half-cylinder.
Energies are exact: the gradient term is closed form and the L² term is a
polynomial integral in the radius.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np
from numpy.polynomial import Polynomial

from src.errors import InternalInconsistencyError, PreconditionError
from src.spectral.extension import CylinderField, ExponentialProfile
from src.spectral.function_space import SpectralBasis, SpectralField
from src.spectral.quadrature import DEFAULT_ORDER
from src.spectral.spectral_basis import DomainSpec
from src.variational.constants import check_ball_inside, unit_ball_measure

# Module version
__version__ = "v1.0-2-2.3-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Profile rate of the lift: exp(-y/2)
LIFT_RATE = 0.5

SANDWICH_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class ConeFunction:
    """Truncated cone of height rho on B(x0, tau) inside a domain."""

    domain: DomainSpec
    x0: np.ndarray
    tau: float
    rho: float

    def __post_init__(self) -> None:
        x0 = np.asarray(self.x0, dtype=float).reshape(-1)
        object.__setattr__(self, "x0", x0)
        if self.tau <= 0 or self.rho < 0:
            raise PreconditionError(
                f"Cone needs tau > 0 and rho >= 0 (tau={self.tau}, rho={self.rho})"
            )
        if not check_ball_inside(self.domain, x0, self.tau):
            raise PreconditionError(
                f"B(x0={x0.tolist()}, tau={self.tau:g}) is not inside {self.domain.describe()}",
                {"x0": x0.tolist(), "tau": self.tau},
            )

    @property
    def dimension(self) -> int:
        return self.domain.dimension

    @property
    def lipschitz(self) -> float:
        return 2.0 * self.rho / self.tau

    def values(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        r = np.linalg.norm(pts - self.x0, axis=1)
        slope = self.lipschitz * (self.tau - r)
        return np.clip(slope, 0.0, self.rho)

    def gradient_norm(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        r = np.linalg.norm(pts - self.x0, axis=1)
        annulus = (r > 0.5 * self.tau) & (r < self.tau)
        return np.where(annulus, self.lipschitz, 0.0)

    def scaled(self, rho: float) -> "ConeFunction":
        return ConeFunction(self.domain, self.x0, self.tau, rho)


@dataclass(frozen=True, eq=False)
class ConeLift:
    """w(x, y) = exp(-y/2) omega(x)."""

    cone: ConeFunction

    @property
    def profile(self) -> ExponentialProfile:
        return ExponentialProfile(LIFT_RATE)

    def as_cylinder_field(self, modes: int, order: int = DEFAULT_ORDER) -> CylinderField:
        """Product-tagged field carrying the exact x-integrals of the cone."""
        projection = project_onto_basis(self.cone, modes, order)
        return CylinderField.product_from_integrals(
            projection.field.basis,
            projection.field.coefficients,
            self.profile,
            gradient_integral=cone_gradient_energy(self.cone),
            l2_integral=cone_l2(self.cone),
        )


# =============================================================================
# Exact energies
# =============================================================================


def cone_gradient_energy(cone: ConeFunction) -> float:
    """4 rho² omega_n tau^{n-2} (1 - 2^{-n})."""
    n = cone.dimension
    return 4.0 * cone.rho**2 * unit_ball_measure(n) * cone.tau ** (n - 2) * (1.0 - 2.0**-n)


def cone_l2(cone: ConeFunction) -> float:
    """int omega² exactly: inner ball plus a polynomial radial integral over the annulus."""
    n, tau, rho = cone.dimension, cone.tau, cone.rho
    omega = unit_ball_measure(n)
    inner = rho**2 * omega * (0.5 * tau) ** n
    # (tau - r)² r^{n-1}, integrated over (tau/2, tau)
    radial = Polynomial([tau, -1.0]) ** 2 * Polynomial([0.0] * (n - 1) + [1.0])
    primitive = radial.integ()
    annulus = (2.0 * rho / tau) ** 2 * n * omega * (primitive(tau) - primitive(0.5 * tau))
    return float(inner + annulus)


def lift_energy(lift: ConeLift) -> float:
    """
    int |grad omega|² + 1/4 int omega², checked against the two-sided bound
    lower = 4 omega_n tau^{n-2} (1 - 2^{-n}) rho²,  upper = lower + |Omega| rho² / 4.

    Raises:
        InternalInconsistencyError: the value leaves the bound
    """
    cone = lift.cone
    gradient = cone_gradient_energy(cone)
    value = gradient + 0.25 * cone_l2(cone)
    upper = gradient + 0.25 * cone.domain.measure * cone.rho**2
    slack = SANDWICH_TOLERANCE * max(1.0, upper)
    if not (gradient - slack <= value <= upper + slack):
        raise InternalInconsistencyError(
            f"Lift energy {value:.15g} outside [{gradient:.15g}, {upper:.15g}]",
            {"value": value, "lower": gradient, "upper": upper},
        )
    return value


# =============================================================================
# Projection
# =============================================================================


@dataclass
class ProjectionResult:
    """L² projection of a cone onto the first N modes."""

    field: SpectralField
    reconstruction_error: float
    cone_l2_norm: float
    projection_l2_norm: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "modes": self.field.size,
            "reconstruction_error": self.reconstruction_error,
            "cone_l2_norm": self.cone_l2_norm,
            "projection_l2_norm": self.projection_l2_norm,
        }


def project_onto_basis(cone: ConeFunction, modes: int, order: int = DEFAULT_ORDER) -> ProjectionResult:
    """
    a_j = int omega phi_j by quadrature; the reconstruction error is the
    relative L² distance between omega and sum a_j phi_j on the same rule.
    """
    basis = SpectralBasis(cone.domain, modes)
    rule = basis.quadrature(order)
    table = basis.table(order)
    values = cone.values(rule.nodes)
    coefficients = table @ (rule.weights * values)

    exact_norm = math.sqrt(cone_l2(cone))
    if exact_norm == 0.0:
        return ProjectionResult(SpectralField.zeros(basis), 0.0, 0.0, 0.0)

    residual = values - coefficients @ table
    cone_norm = math.sqrt(rule.integrate(values**2))
    error = math.sqrt(rule.integrate(residual**2)) / cone_norm if cone_norm > 0 else 0.0
    logger.debug(f"🔍 Cone projection on N={modes}: relative L² error {error:.3e}")
    return ProjectionResult(
        field=SpectralField(basis, coefficients),
        reconstruction_error=error,
        cone_l2_norm=exact_norm,
        projection_l2_norm=float(np.linalg.norm(coefficients)),
    )


__all__ = [
    "ConeFunction",
    "ConeLift",
    "ProjectionResult",
    "cone_gradient_energy",
    "cone_l2",
    "lift_energy",
    "project_onto_basis",
]
