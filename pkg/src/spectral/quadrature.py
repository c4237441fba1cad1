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
Quadrature Rules on Supported Domains
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.2-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Spectral Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

RULES:
    rectangle  tensor Gauss-Legendre, `order` nodes per axis
    disk       Gauss-Legendre in r (weight r dr) x trapezoid in theta
               with 2 * order equispaced angles
    midpoint   uniform cell-centre rule over the bounding box, cells whose
               centre lies outside the domain dropped (independent oracle)
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from src.errors import RangeError
from src.spectral.spectral_basis import DomainKind, DomainSpec

# Module version
__version__ = "v1.0-1-1.2-1"

# Initialize logger
logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes (M, n) and positive weights (M,) integrating over the domain."""

    domain: DomainSpec
    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    @property
    def size(self) -> int:
        return int(self.weights.shape[0])

    def integrate(self, values: np.ndarray) -> float:
        """Integrate nodal values (last axis runs over nodes)."""
        return float(np.dot(np.asarray(values, dtype=float), self.weights))


def _gauss_interval(order: int, lower: float, upper: float):
    x, w = roots_legendre(order)
    half = 0.5 * (upper - lower)
    return lower + half * (x + 1.0), half * w


@lru_cache(maxsize=32)
def build_quadrature(domain: DomainSpec, order: int = DEFAULT_ORDER) -> QuadratureRule:
    """
    Build (and cache) the Gauss rule of the given order for a domain.

    Raises:
        RangeError: order < 2
    """
    if int(order) < 2:
        raise RangeError(f"Quadrature order must be >= 2, got {order}", {"order": order})
    order = int(order)

    if domain.kind is DomainKind.DISK:
        radius = domain.radius
        r, wr = _gauss_interval(order, 0.0, radius)
        n_theta = 2 * order
        theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
        rr, tt = np.meshgrid(r, theta, indexing="ij")
        nodes = np.stack([(rr * np.cos(tt)).ravel(), (rr * np.sin(tt)).ravel()], axis=1)
        weights = np.repeat(wr * r, n_theta) * (2.0 * math.pi / n_theta)
        kind = "gauss-polar"
    else:
        axes = [_gauss_interval(order, 0.0, length) for length in domain.sizes]
        grids = np.meshgrid(*[a[0] for a in axes], indexing="ij")
        wgrids = np.meshgrid(*[a[1] for a in axes], indexing="ij")
        nodes = np.stack([g.ravel() for g in grids], axis=1)
        weights = np.prod(np.stack([g.ravel() for g in wgrids], axis=1), axis=1)
        kind = "gauss-tensor"

    logger.debug(f"🔍 Built {kind} rule with {weights.shape[0]} nodes on {domain.describe()}")
    return QuadratureRule(domain, nodes, weights, kind)


def midpoint_grid(domain: DomainSpec, resolution: int) -> QuadratureRule:
    """Uniform midpoint rule with `resolution` cells per axis of the bounding box."""
    if int(resolution) < 1:
        raise RangeError(f"Grid resolution must be >= 1, got {resolution}")
    lower, upper = domain.bounding_box
    h = (upper - lower) / resolution
    axes = [lower[i] + h[i] * (np.arange(resolution) + 0.5) for i in range(domain.dimension)]
    grids = np.meshgrid(*axes, indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=1)
    inside = domain.contains(nodes, slack=0.0)
    nodes = nodes[inside]
    weights = np.full(nodes.shape[0], float(np.prod(h)))
    return QuadratureRule(domain, nodes, weights, "midpoint")


__all__ = ["QuadratureRule", "build_quadrature", "midpoint_grid", "DEFAULT_ORDER"]
