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
Dirichlet Eigenbasis for Explicit Domains
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Spectral Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Describe the supported domains (rectangles in 2-D/3-D, the disk in 2-D)
- Enumerate exact Dirichlet eigenpairs in ascending order with a
  deterministic tie-break on the mode descriptor
- Evaluate L²-normalized eigenfunctions and their gradients
- Provide Bessel zeros j_{m,k} for the disk basis

CONVENTIONS:
    rectangle  (0, L_1) x ... x (0, L_n), n in {2, 3}
               phi = prod sqrt(2/L_i) sin(k_i pi x_i / L_i)
               descriptor (k_1, ..., k_n)
    disk       centred at the origin, radius R
               phi = C J_m(j_{m,k} r / R) cos(m theta) | sin(m theta)
               descriptor (m, k, parity), cos before sin

USAGE:
    from src.spectral.spectral_basis import DomainSpec, eigenpairs

    square = DomainSpec.rectangle(math.pi, math.pi)
    pairs = eigenpairs(square, 10)
    pairs[0].eigenvalue  # 2.0
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize, special

from src.errors import OutOfDomainError, RangeError, UnsupportedDomainError

# Module version
__version__ = "v1.0-1-1.1-1"

# Initialize logger
logger = logging.getLogger(__name__)


# =============================================================================
# Constants
# =============================================================================

# Supported Bessel zero table
MAX_BESSEL_ORDER = 32
MAX_BESSEL_INDEX = 64

# Relative tolerance used to group numerically equal eigenvalues
TIE_TOLERANCE = 1e-12

# Boundary slack for membership tests (relative to the domain scale)
BOUNDARY_SLACK = 1e-12


class DomainKind(str, Enum):
    """Supported domain kinds."""

    RECTANGLE = "rectangle"
    DISK = "disk"


class Parity(str, Enum):
    """Angular parity of a disk mode."""

    COS = "cos"
    SIN = "sin"


# =============================================================================
# Domain
# =============================================================================


@dataclass(frozen=True)
class DomainSpec:
    """
    An explicit domain with closed-form Dirichlet eigenpairs.

    Attributes:
        kind: rectangle or disk
        sizes: side lengths (rectangle) or a one-tuple holding the radius (disk)
    """

    kind: DomainKind
    sizes: Tuple[float, ...]

    def __post_init__(self) -> None:
        kind = DomainKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "sizes", tuple(float(s) for s in self.sizes))

        if any(not math.isfinite(s) or s <= 0.0 for s in self.sizes):
            raise UnsupportedDomainError(
                f"Domain sizes must be positive and finite, got {self.sizes}",
                {"sizes": list(self.sizes)},
            )
        if kind is DomainKind.RECTANGLE and len(self.sizes) not in (2, 3):
            raise UnsupportedDomainError(
                f"Rectangles are supported in dimension 2 or 3, got {len(self.sizes)}",
                {"dimension": len(self.sizes)},
            )
        if kind is DomainKind.DISK and len(self.sizes) != 1:
            raise UnsupportedDomainError(
                "A disk takes exactly one size (its radius)",
                {"sizes": list(self.sizes)},
            )

    @classmethod
    def rectangle(cls, *lengths: float) -> "DomainSpec":
        """Build the box (0, L_1) x ... x (0, L_n)."""
        return cls(DomainKind.RECTANGLE, tuple(lengths))

    @classmethod
    def disk(cls, radius: float) -> "DomainSpec":
        """Build the disk of the given radius centred at the origin."""
        return cls(DomainKind.DISK, (radius,))

    @property
    def dimension(self) -> int:
        return 2 if self.kind is DomainKind.DISK else len(self.sizes)

    @property
    def radius(self) -> float:
        if self.kind is not DomainKind.DISK:
            raise UnsupportedDomainError("Only disks have a radius")
        return self.sizes[0]

    @property
    def measure(self) -> float:
        """|Omega|: product of side lengths or pi r^2."""
        if self.kind is DomainKind.DISK:
            return math.pi * self.sizes[0] ** 2
        return float(math.prod(self.sizes))

    @property
    def scale(self) -> float:
        return max(self.sizes)

    @property
    def bounding_box(self) -> Tuple[np.ndarray, np.ndarray]:
        """Lower and upper corners of the smallest enclosing box."""
        if self.kind is DomainKind.DISK:
            r = self.sizes[0]
            return np.array([-r, -r]), np.array([r, r])
        return np.zeros(self.dimension), np.array(self.sizes)

    @property
    def centroid(self) -> np.ndarray:
        if self.kind is DomainKind.DISK:
            return np.zeros(2)
        return 0.5 * np.array(self.sizes)

    def distance_to_boundary(self, x) -> float:
        """Euclidean distance from an interior point to the boundary."""
        point = np.asarray(x, dtype=float).reshape(-1)
        if point.shape[0] != self.dimension:
            raise OutOfDomainError(
                f"Point has dimension {point.shape[0]}, domain has {self.dimension}"
            )
        if not bool(self.contains(point[None, :])[0]):
            raise OutOfDomainError(f"Point {point.tolist()} is outside the domain")
        if self.kind is DomainKind.DISK:
            return float(self.sizes[0] - np.linalg.norm(point))
        upper = np.array(self.sizes)
        return float(np.min(np.minimum(point, upper - point)))

    def contains(self, points, slack: float = BOUNDARY_SLACK) -> np.ndarray:
        """Boolean mask of points lying in the closed domain."""
        pts = _as_points(points, self.dimension)
        tol = slack * self.scale
        if self.kind is DomainKind.DISK:
            return np.linalg.norm(pts, axis=1) <= self.sizes[0] + tol
        upper = np.array(self.sizes)
        return np.all((pts >= -tol) & (pts <= upper + tol), axis=1)

    def describe(self) -> str:
        if self.kind is DomainKind.DISK:
            return f"disk(r={self.sizes[0]:g})"
        return "rectangle(" + " x ".join(f"{s:g}" for s in self.sizes) + ")"


def _as_points(points, dimension: int) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(1, -1)
    if pts.shape[-1] != dimension:
        raise OutOfDomainError(
            f"Points have dimension {pts.shape[-1]}, domain has {dimension}"
        )
    return pts


# =============================================================================
# Bessel zeros
# =============================================================================


@lru_cache(maxsize=None)
def _bessel_zero_row(m: int, count: int) -> Tuple[float, ...]:
    """First `count` positive zeros of J_m, polished with brentq."""
    rough = special.jn_zeros(m, count)
    refined: List[float] = []
    for z in rough:
        lo, hi = z - 0.5, z + 0.5
        if special.jv(m, lo) * special.jv(m, hi) < 0.0:
            z = optimize.brentq(
                lambda t: special.jv(m, t), lo, hi, xtol=1e-15, rtol=1e-15, maxiter=200
            )
        refined.append(float(z))
    return tuple(refined)


def bessel_j_zero(m: int, k: int) -> float:
    """
    k-th positive zero of the Bessel function J_m.

    Args:
        m: order, 0 <= m <= 32
        k: index, 1 <= k <= 64

    Returns:
        j_{m,k} to absolute tolerance 1e-12

    Raises:
        RangeError: order or index outside the supported table
    """
    if not (0 <= int(m) <= MAX_BESSEL_ORDER) or int(m) != m:
        raise RangeError(
            f"Bessel order must be an integer in [0, {MAX_BESSEL_ORDER}], got {m}",
            {"m": m},
        )
    if not (1 <= int(k) <= MAX_BESSEL_INDEX) or int(k) != k:
        raise RangeError(
            f"Bessel zero index must be an integer in [1, {MAX_BESSEL_INDEX}], got {k}",
            {"k": k},
        )
    return _bessel_zero_row(int(m), MAX_BESSEL_INDEX)[int(k) - 1]


# =============================================================================
# Eigenpairs
# =============================================================================


@dataclass(frozen=True)
class EigenPair:
    """
    One normalized Dirichlet eigenpair.

    Attributes:
        index: 1-based position in the ascending enumeration
        eigenvalue: lambda_j
        descriptor: (k_1, ..., k_n) or (m, k, parity)
        normalization: constant making the L² norm one
        domain: the owning domain
        bessel_zero: j_{m,k} for disk modes
    """

    index: int
    eigenvalue: float
    descriptor: Tuple
    normalization: float
    domain: DomainSpec
    bessel_zero: Optional[float] = None

    @property
    def sqrt_eigenvalue(self) -> float:
        return math.sqrt(self.eigenvalue)

    def label(self) -> str:
        if self.domain.kind is DomainKind.DISK:
            m, k, parity = self.descriptor
            return f"m={m};k={k};{parity}"
        return "(" + ";".join(str(k) for k in self.descriptor) + ")"

    def values(self, points) -> np.ndarray:
        """Eigenfunction values without a domain check."""
        return mode_table((self,), points)[0]

    def gradients(self, points) -> np.ndarray:
        """Eigenfunction gradients, shape (M, n)."""
        return mode_gradient_table((self,), points)[0]


def _rectangle_pairs(domain: DomainSpec, count: int) -> List[EigenPair]:
    lengths = np.array(domain.sizes)
    n = domain.dimension
    # Weyl estimate for the count-th eigenvalue, doubled until enough modes fit
    omega = math.pi ** (n / 2) / math.gamma(n / 2 + 1)
    bound = 2.0 * (count * (2 * math.pi) ** n / (domain.measure * omega)) ** (2 / n)

    while True:
        kmax = np.floor(lengths * math.sqrt(bound) / math.pi).astype(int)
        if np.all(kmax >= 1):
            grids = np.meshgrid(*[np.arange(1, k + 1) for k in kmax], indexing="ij")
            indices = np.stack([g.reshape(-1) for g in grids], axis=1)
            lam = np.sum((indices * math.pi / lengths) ** 2, axis=1)
            keep = lam <= bound
            if int(np.count_nonzero(keep)) >= count:
                break
        bound *= 2.0

    indices, lam = indices[keep], lam[keep]
    norm = float(np.prod(np.sqrt(2.0 / lengths)))
    candidates = [
        (float(l), tuple(int(k) for k in idx)) for l, idx in zip(lam, indices)
    ]
    ordered = _tie_break(candidates)[:count]
    return [
        EigenPair(j + 1, lam_j, desc, norm, domain)
        for j, (lam_j, desc) in enumerate(ordered)
    ]


def _disk_pairs(domain: DomainSpec, count: int) -> List[EigenPair]:
    radius = domain.radius
    # Every zero below this bound is inside the table
    coverage = min(
        float(special.jn_zeros(MAX_BESSEL_ORDER + 1, 1)[0]),
        float(special.jn_zeros(0, MAX_BESSEL_INDEX + 1)[-1]),
    )

    candidates = []
    for m in range(MAX_BESSEL_ORDER + 1):
        for k, z in enumerate(_bessel_zero_row(m, MAX_BESSEL_INDEX), start=1):
            if z >= coverage:
                break
            lam = (z / radius) ** 2
            candidates.append((lam, (m, k, Parity.COS.value)))
            if m > 0:
                candidates.append((lam, (m, k, Parity.SIN.value)))

    if count > len(candidates):
        raise RangeError(
            f"Disk basis supports at most {len(candidates)} modes, requested {count}",
            {"requested": count, "available": len(candidates)},
        )

    pairs = []
    for j, (lam, desc) in enumerate(_tie_break(candidates)[:count]):
        m, k, _ = desc
        zero = bessel_j_zero(m, k)
        edge = abs(float(special.jv(m + 1, zero)))
        factor = 1.0 if m == 0 else math.sqrt(2.0)
        norm = factor / (math.sqrt(math.pi) * radius * edge)
        pairs.append(EigenPair(j + 1, lam, desc, norm, domain, bessel_zero=zero))
    return pairs


def _tie_break(candidates: List[Tuple[float, Tuple]]) -> List[Tuple[float, Tuple]]:
    """Sort by eigenvalue; equal eigenvalues ordered by descriptor."""
    ordered = sorted(candidates, key=lambda item: item[0])
    result: List[Tuple[float, Tuple]] = []
    group: List[Tuple[float, Tuple]] = []
    for item in ordered:
        if group and item[0] - group[0][0] > TIE_TOLERANCE * max(1.0, group[0][0]):
            result.extend(sorted(group, key=lambda g: g[1]))
            group = []
        group.append(item)
    result.extend(sorted(group, key=lambda g: g[1]))
    return result


@lru_cache(maxsize=64)
def _cached_pairs(domain: DomainSpec, count: int) -> Tuple[EigenPair, ...]:
    if domain.kind is DomainKind.DISK:
        pairs = _disk_pairs(domain, count)
    else:
        pairs = _rectangle_pairs(domain, count)
    logger.debug(
        f"🔍 Enumerated {count} eigenpairs on {domain.describe()} "
        f"(lambda_1={pairs[0].eigenvalue:.6g}, lambda_N={pairs[-1].eigenvalue:.6g})"
    )
    return tuple(pairs)


def eigenpairs(domain: DomainSpec, count: int) -> Tuple[EigenPair, ...]:
    """
    First `count` Dirichlet eigenpairs of -Laplacian, ascending.

    Raises:
        UnsupportedDomainError: unsupported kind or dimension
        RangeError: count < 1 or beyond the disk's Bessel table
    """
    if not isinstance(domain, DomainSpec):
        raise UnsupportedDomainError(f"Unsupported domain object: {domain!r}")
    if int(count) < 1:
        raise RangeError(f"Number of modes must be >= 1, got {count}", {"N": count})
    return _cached_pairs(domain, int(count))


# =============================================================================
# Evaluation
# =============================================================================


def _polar(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return np.hypot(points[:, 0], points[:, 1]), np.arctan2(points[:, 1], points[:, 0])


def mode_table(pairs, points) -> np.ndarray:
    """Values of each eigenfunction at each point, shape (len(pairs), M)."""
    pairs = tuple(pairs)
    domain = pairs[0].domain
    pts = _as_points(points, domain.dimension)

    if domain.kind is DomainKind.RECTANGLE:
        lengths = np.array(domain.sizes)
        k = np.array([p.descriptor for p in pairs], dtype=float)
        phases = k[:, None, :] * math.pi * pts[None, :, :] / lengths
        norm = np.array([p.normalization for p in pairs])
        return norm[:, None] * np.prod(np.sin(phases), axis=2)

    r, theta = _polar(pts)
    m = np.array([p.descriptor[0] for p in pairs], dtype=float)
    kappa = np.array([p.bessel_zero for p in pairs]) / domain.radius
    norm = np.array([p.normalization for p in pairs])
    is_sin = np.array([p.descriptor[2] == Parity.SIN.value for p in pairs])
    angular = np.where(
        is_sin[:, None], np.sin(m[:, None] * theta), np.cos(m[:, None] * theta)
    )
    radial = special.jv(m[:, None], kappa[:, None] * r[None, :])
    return norm[:, None] * radial * angular


def mode_gradient_table(pairs, points) -> np.ndarray:
    """Gradients of each eigenfunction, shape (len(pairs), M, n)."""
    pairs = tuple(pairs)
    domain = pairs[0].domain
    pts = _as_points(points, domain.dimension)

    if domain.kind is DomainKind.RECTANGLE:
        lengths = np.array(domain.sizes)
        k = np.array([p.descriptor for p in pairs], dtype=float)
        freq = k * math.pi / lengths
        phases = freq[:, None, :] * pts[None, :, :]
        sines, cosines = np.sin(phases), np.cos(phases)
        norm = np.array([p.normalization for p in pairs])
        grads = np.empty(phases.shape)
        for axis in range(domain.dimension):
            others = np.delete(sines, axis, axis=2)
            grads[:, :, axis] = (
                freq[:, None, axis] * cosines[:, :, axis] * np.prod(others, axis=2)
            )
        return norm[:, None, None] * grads

    r, theta = _polar(pts)
    m = np.array([p.descriptor[0] for p in pairs], dtype=float)[:, None]
    kappa = (np.array([p.bessel_zero for p in pairs]) / domain.radius)[:, None]
    norm = np.array([p.normalization for p in pairs])[:, None]
    is_sin = np.array([p.descriptor[2] == Parity.SIN.value for p in pairs])[:, None]
    z = kappa * r[None, :]

    # d/dr and (1/r) d/dtheta; J_m(z)/z = (J_{m-1} + J_{m+1}) / (2m) keeps r = 0 finite
    d_radial = kappa * special.jvp(m, z)
    over_r = kappa * 0.5 * (special.jv(m - 1, z) + special.jv(m + 1, z))
    cos_m, sin_m = np.cos(m * theta), np.sin(m * theta)
    angular = np.where(is_sin, sin_m, cos_m)
    d_angular = np.where(is_sin, cos_m, -sin_m)

    g_r = norm * d_radial * angular
    g_t = np.where(m > 0, norm * over_r * d_angular, 0.0)
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    grads = np.empty((len(pairs), pts.shape[0], 2))
    grads[:, :, 0] = g_r * cos_t - g_t * sin_t
    grads[:, :, 1] = g_r * sin_t + g_t * cos_t
    return grads


def eval_eigenfunction(pair: EigenPair, points) -> np.ndarray:
    """
    Evaluate a normalized eigenfunction at points of the closed domain.

    Raises:
        OutOfDomainError: any point outside the closure of the domain
    """
    pts = _as_points(points, pair.domain.dimension)
    inside = pair.domain.contains(pts)
    if not np.all(inside):
        bad = pts[~inside][0]
        raise OutOfDomainError(
            f"Point {bad.tolist()} lies outside {pair.domain.describe()}",
            {"point": bad.tolist()},
        )
    return pair.values(pts)


def eval_eigenfunction_gradient(pair: EigenPair, points) -> np.ndarray:
    """Gradient counterpart of eval_eigenfunction."""
    pts = _as_points(points, pair.domain.dimension)
    if not np.all(pair.domain.contains(pts)):
        raise OutOfDomainError(f"Points outside {pair.domain.describe()}")
    return pair.gradients(pts)


__all__ = [
    "DomainKind",
    "Parity",
    "DomainSpec",
    "EigenPair",
    "bessel_j_zero",
    "eigenpairs",
    "mode_table",
    "mode_gradient_table",
    "eval_eigenfunction",
    "eval_eigenfunction_gradient",
    "MAX_BESSEL_ORDER",
    "MAX_BESSEL_INDEX",
]
