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
Spectral Representation of H_0^{1/2}
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.3-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Spectral Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- SpectralBasis / SpectralField: u = sum a_j phi_j on the first N modes
- The half-Laplacian a_j -> a_j sqrt(lambda_j) and the norm
  (sum a_j² sqrt(lambda_j))^{1/2}
- L^p norms of traces by quadrature
- Lower-bound estimates of the trace-embedding constants c_p

X-COORDINATES:
    c_j = a_j lambda_j^{1/4} turns the energy inner product into the
    Euclidean one. Solvers and the estimator work in these coordinates.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import CriticalExponentError, RangeError
from src.spectral.quadrature import DEFAULT_ORDER, QuadratureRule, build_quadrature
from src.spectral.spectral_basis import DomainSpec, EigenPair, eigenpairs, mode_table

# Module version
__version__ = "v1.0-1-1.3-1"

# Initialize logger
logger = logging.getLogger(__name__)


# =============================================================================
# Basis
# =============================================================================


@dataclass(frozen=True)
class SpectralBasis:
    """The span of the first `size` Dirichlet eigenfunctions of a domain."""

    domain: DomainSpec
    size: int

    def __post_init__(self) -> None:
        if int(self.size) < 1:
            raise RangeError(f"Basis size must be >= 1, got {self.size}")
        object.__setattr__(self, "size", int(self.size))

    @cached_property
    def pairs(self) -> Tuple[EigenPair, ...]:
        return eigenpairs(self.domain, self.size)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        values = np.array([p.eigenvalue for p in self.pairs])
        values.setflags(write=False)
        return values

    @cached_property
    def sqrt_eigenvalues(self) -> np.ndarray:
        values = np.sqrt(self.eigenvalues)
        values.setflags(write=False)
        return values

    @cached_property
    def quarter_powers(self) -> np.ndarray:
        """lambda_j^{1/4}, the X-coordinate scaling."""
        values = np.sqrt(self.sqrt_eigenvalues)
        values.setflags(write=False)
        return values

    def quadrature(self, order: int = DEFAULT_ORDER) -> QuadratureRule:
        return build_quadrature(self.domain, order)

    def table(self, order: int = DEFAULT_ORDER) -> np.ndarray:
        """Modes x nodes table of eigenfunction values on the Gauss rule."""
        return _basis_table(self, int(order))

    def with_size(self, size: int) -> "SpectralBasis":
        return SpectralBasis(self.domain, size)


@lru_cache(maxsize=32)
def _basis_table(basis: SpectralBasis, order: int) -> np.ndarray:
    rule = build_quadrature(basis.domain, order)
    table = mode_table(basis.pairs, rule.nodes)
    table.setflags(write=False)
    return table


# =============================================================================
# Fields
# =============================================================================


@dataclass(frozen=True, eq=False)
class SpectralField:
    """
    A function u = sum_j a_j phi_j in the Galerkin subspace.

    Immutable; arithmetic returns new fields on the same basis.
    """

    basis: SpectralBasis
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.array(self.coefficients, dtype=float).reshape(-1)
        if coeffs.shape[0] != self.basis.size:
            raise RangeError(
                f"Field has {coeffs.shape[0]} coefficients, basis has {self.basis.size}",
                {"coefficients": coeffs.shape[0], "N": self.basis.size},
            )
        if not np.all(np.isfinite(coeffs)):
            raise RangeError("Field coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    # ------------------------------------------------------------------ builders

    @classmethod
    def zeros(cls, basis: SpectralBasis) -> "SpectralField":
        return cls(basis, np.zeros(basis.size))

    @classmethod
    def mode(cls, basis: SpectralBasis, j: int, amplitude: float = 1.0) -> "SpectralField":
        """amplitude * phi_j (1-based j)."""
        if not 1 <= j <= basis.size:
            raise RangeError(f"Mode index {j} outside 1..{basis.size}")
        coeffs = np.zeros(basis.size)
        coeffs[j - 1] = amplitude
        return cls(basis, coeffs)

    @classmethod
    def from_x_coordinates(cls, basis: SpectralBasis, coords) -> "SpectralField":
        return cls(basis, np.asarray(coords, dtype=float) / basis.quarter_powers)

    # ---------------------------------------------------------------- accessors

    @property
    def size(self) -> int:
        return self.basis.size

    def x_coordinates(self) -> np.ndarray:
        return self.coefficients * self.basis.quarter_powers

    def values(self, points) -> np.ndarray:
        """Pointwise values at arbitrary points (no domain check)."""
        return self.coefficients @ mode_table(self.basis.pairs, points)

    def nodal_values(self, order: int = DEFAULT_ORDER) -> np.ndarray:
        """Values on the Gauss rule of the given order."""
        return self.coefficients @ self.basis.table(order)

    def padded(self, size: int) -> "SpectralField":
        """Embed into (or truncate to) a basis of another size."""
        coeffs = np.zeros(size)
        keep = min(size, self.size)
        coeffs[:keep] = self.coefficients[:keep]
        return SpectralField(self.basis.with_size(size), coeffs)

    # --------------------------------------------------------------- arithmetic

    def _check(self, other: "SpectralField") -> None:
        if other.basis != self.basis:
            raise RangeError("Fields live on different bases")

    def __add__(self, other: "SpectralField") -> "SpectralField":
        self._check(other)
        return SpectralField(self.basis, self.coefficients + other.coefficients)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        self._check(other)
        return SpectralField(self.basis, self.coefficients - other.coefficients)

    def __mul__(self, scalar: float) -> "SpectralField":
        return SpectralField(self.basis, float(scalar) * self.coefficients)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "SpectralField":
        return SpectralField(self.basis, self.coefficients / float(scalar))

    def __neg__(self) -> "SpectralField":
        return SpectralField(self.basis, -self.coefficients)

    def __repr__(self) -> str:
        return f"SpectralField(N={self.size}, norm={h_half_norm(self):.6g})"


# =============================================================================
# Norms and operators
# =============================================================================


def critical_exponent(dimension: int) -> float:
    """Fractional critical trace exponent 2n/(n-1)."""
    if dimension < 2:
        raise RangeError(f"Critical exponent needs dimension >= 2, got {dimension}")
    return 2.0 * dimension / (dimension - 1)


def h_half_norm(u: SpectralField) -> float:
    """(sum a_j² sqrt(lambda_j))^{1/2}."""
    return float(math.sqrt(np.dot(u.coefficients**2, u.basis.sqrt_eigenvalues)))


def apply_sqrt_laplacian(u: SpectralField) -> SpectralField:
    """Coefficient-wise a_j -> a_j sqrt(lambda_j)."""
    return SpectralField(u.basis, u.coefficients * u.basis.sqrt_eigenvalues)


def x_inner(u: SpectralField, v: SpectralField) -> float:
    """Energy inner product sum a_j b_j sqrt(lambda_j)."""
    u._check(v)
    return float(np.dot(u.coefficients * v.coefficients, u.basis.sqrt_eigenvalues))


def x_distance(u: SpectralField, v: SpectralField) -> float:
    return h_half_norm(u - v)


def _check_exponent(p: float, dimension: int, allow_critical: bool) -> float:
    p_crit = critical_exponent(dimension)
    if math.isclose(p, p_crit, rel_tol=1e-12) and not allow_critical:
        raise CriticalExponentError(
            f"The trace embedding is not compact at p = 2n/(n-1) = {p_crit:g}",
            {"p": p, "critical_exponent": p_crit},
        )
    if not (1.0 <= p <= p_crit * (1 + 1e-12)):
        raise RangeError(
            f"Exponent p = {p} outside [1, {p_crit:g}]",
            {"p": p, "critical_exponent": p_crit},
        )
    return p_crit


def lp_trace_norm(u: SpectralField, p: float, order: int = DEFAULT_ORDER) -> float:
    """
    Quadrature approximation of the L^p(Omega) norm of u.

    Raises:
        RangeError: p outside [1, 2n/(n-1)]
    """
    _check_exponent(float(p), u.basis.domain.dimension, allow_critical=True)
    rule = u.basis.quadrature(order)
    values = np.abs(u.nodal_values(order))
    return float(np.dot(values**p, rule.weights) ** (1.0 / p))


# =============================================================================
# Embedding constants
# =============================================================================


@dataclass
class EmbeddingConstants:
    """
    Lower-bound estimate of the trace-embedding constant c_p.

    Attributes:
        p: exponent in [1, 2n/(n-1))
        estimate: max of ||Tr w||_p / ||w|| found on the N-mode subspace
        critical_exponent: 2n/(n-1)
        modes: N
        restarts: number of ascent starts (random plus deterministic)
        ascent_steps: step budget per start
        exact: True only for p = 2, where phi_1 attains the sharp constant
        certified: always False; the value is a subspace lower bound
        maximizer: X-coordinates of the best start's end point
    """

    p: float
    estimate: float
    critical_exponent: float
    modes: int
    restarts: int
    ascent_steps: int
    seed: int
    exact: bool = False
    certified: bool = False
    maximizer: Optional[np.ndarray] = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "estimate": self.estimate,
            "critical_exponent": self.critical_exponent,
            "modes": self.modes,
            "restarts": self.restarts,
            "ascent_steps": self.ascent_steps,
            "seed": self.seed,
            "exact": self.exact,
            "certified": self.certified,
            "provenance": "exact" if self.exact else "lower-bound",
        }


class _RatioObjective:
    """G(c) = ||sum_j c_j lambda_j^{-1/4} phi_j||_{L^p} on the unit X-sphere."""

    def __init__(self, basis: SpectralBasis, p: float, order: int):
        self.p = p
        self.scaled = basis.table(order) / basis.quarter_powers[:, None]
        self.weights = basis.quadrature(order).weights

    def value(self, c: np.ndarray) -> float:
        u = c @ self.scaled
        return float(np.dot(np.abs(u) ** self.p, self.weights) ** (1.0 / self.p))

    def gradient(self, c: np.ndarray, g_value: float) -> np.ndarray:
        u = c @ self.scaled
        if self.p == 1.0:
            inner = np.sign(u)
        else:
            inner = np.abs(u) ** (self.p - 1.0) * np.sign(u)
        return g_value ** (1.0 - self.p) * (self.scaled @ (self.weights * inner))


def _ascend(
    objective: _RatioObjective, start: np.ndarray, steps: int
) -> Tuple[float, np.ndarray]:
    """Projected ascent with step halving on non-improvement."""
    c = start / np.linalg.norm(start)
    value = objective.value(c)
    step = 1.0
    for _ in range(steps):
        if value <= 0.0:
            break
        grad = objective.gradient(c, value)
        tangent = grad - np.dot(grad, c) * c
        if np.linalg.norm(tangent) < 1e-14:
            break
        trial = c + step * tangent
        trial /= np.linalg.norm(trial)
        trial_value = objective.value(trial)
        if trial_value > value:
            c, value = trial, trial_value
            step = min(2.0 * step, 16.0)
        else:
            step *= 0.5
            if step < 1e-12:
                break
    return value, c


def estimate_embedding_constant(
    domain: DomainSpec,
    p: float,
    modes: int = 64,
    restarts: int = 32,
    ascent_steps: int = 200,
    seed: int = 0,
    order: int = DEFAULT_ORDER,
    warm_start: Optional[Sequence[float]] = None,
    threads: int = 1,
    logging_manager: Optional[Any] = None,
) -> EmbeddingConstants:
    """
    Lower bound on c_p from ascent on the N-mode subspace.

    Start 0 is phi_1; starts 1..restarts-1 draw from default_rng([seed, r]);
    an optional warm start (X-coordinates, zero-padded) is tried as well.
    The reduction is a max over starts, earliest index winning ties.

    Raises:
        CriticalExponentError: p = 2n/(n-1)
        RangeError: p outside [1, 2n/(n-1)) or modes < 1
    """
    log = logging_manager.get_logger("embedding") if logging_manager else logger
    p = float(p)
    p_crit = _check_exponent(p, domain.dimension, allow_critical=False)
    basis = SpectralBasis(domain, modes)
    objective = _RatioObjective(basis, p, order)

    starts: List[np.ndarray] = []
    first = np.zeros(basis.size)
    first[0] = 1.0
    starts.append(first)
    for r in range(1, max(int(restarts), 1)):
        rng = np.random.default_rng([int(seed), r])
        starts.append(rng.standard_normal(basis.size))
    if warm_start is not None:
        warm = np.zeros(basis.size)
        prior = np.asarray(warm_start, dtype=float)[: basis.size]
        warm[: prior.shape[0]] = prior
        if np.linalg.norm(warm) > 0.0:
            starts.append(warm)

    def run(start: np.ndarray) -> Tuple[float, np.ndarray]:
        return _ascend(objective, start, int(ascent_steps))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(s) for s in starts]

    best_index = max(range(len(results)), key=lambda i: (results[i][0], -i))
    best_value, best_c = results[best_index]

    log.debug(
        f"🔍 c_{p:g} >= {best_value:.10g} (N={basis.size}, starts={len(starts)}, "
        f"best start #{best_index})"
    )
    return EmbeddingConstants(
        p=p,
        estimate=best_value,
        critical_exponent=p_crit,
        modes=basis.size,
        restarts=len(starts),
        ascent_steps=int(ascent_steps),
        seed=int(seed),
        exact=math.isclose(p, 2.0),
        maximizer=best_c,
    )


def embedding_ladder(
    domain: DomainSpec,
    p: float,
    sizes: Sequence[int],
    **kwargs: Any,
) -> List[EmbeddingConstants]:
    """
    Estimates on nested subspaces, each level warm-started from the previous
    maximizer, so the sequence is nondecreasing in N.
    """
    ladder: List[EmbeddingConstants] = []
    warm: Optional[np.ndarray] = None
    for size in sorted(int(s) for s in sizes):
        result = estimate_embedding_constant(domain, p, modes=size, warm_start=warm, **kwargs)
        if ladder and result.estimate < ladder[-1].estimate:
            # the warm start alone reproduces the previous value and maximizer
            previous = ladder[-1].maximizer
            padded = np.zeros(result.modes)
            padded[: previous.shape[0]] = previous
            result.estimate = ladder[-1].estimate
            result.maximizer = padded
        ladder.append(result)
        warm = result.maximizer
    return ladder


__all__ = [
    "SpectralBasis",
    "SpectralField",
    "EmbeddingConstants",
    "critical_exponent",
    "h_half_norm",
    "apply_sqrt_laplacian",
    "x_inner",
    "x_distance",
    "lp_trace_norm",
    "estimate_embedding_constant",
    "embedding_ladder",
]
