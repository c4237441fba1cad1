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
Energy Functional and Nonlinearities
----------------------------------------------------------------------------
FILE VERSION: v1.0-2-2.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 2 - Variational Core
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Nonlinearity: f, its potential F, f' and the certificates
    growth         |f(t)| <= a1 + a2 |t|^{q-1},  1 < q < 2n/(n-1)
    sign           F >= 0 on [0, inf)
    subquadratic   F(t) <= b (1 + |t|^l),  l < 2
    m-growth       f(t) <= a2 t^m on (0, zeta]
- BetaField: constant or gridded weight with beta0 = min, sup = max
- ProblemInstance: the Galerkin problem with its modes x nodes table
- J = Phi - lambda Psi, its X-gradient, the truncated functional and the
  Galerkin residual

One-sided kinds (bump, truncated) vanish for t <= 0. Certificates are
spot-checked on a log grid t in [1e-6, 1e3] when a nonlinearity is built.
"""

import copy
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import RegularGridInterpolator

from src.errors import CertificateError, GrowthRangeError, RangeError
from src.spectral.function_space import SpectralBasis, SpectralField, critical_exponent
from src.spectral.quadrature import DEFAULT_ORDER
from src.spectral.spectral_basis import DomainSpec

# Module version
__version__ = "v1.0-2-2.1-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Spot-check grid for certificates
CERTIFICATE_GRID = np.logspace(-6, 3, 400)
CERTIFICATE_SLACK = 1e-9


class NonlinearityKind(str, Enum):
    """Builtin nonlinearity families."""

    POWER = "power"
    BUMP = "bump"
    TRUNCATED = "truncated"
    TABULATED = "tabulated"
    POLYNOMIAL = "polynomial"


# =============================================================================
# Certificates
# =============================================================================


@dataclass(frozen=True)
class GrowthCertificate:
    """|f(t)| <= a1 + a2 |t|^{q-1}."""

    a1: float
    a2: float
    q: float

    def __post_init__(self) -> None:
        if self.a1 < 0 or self.a2 < 0:
            raise CertificateError(
                f"Growth constants must be nonnegative (a1={self.a1}, a2={self.a2})"
            )
        if self.q <= 1.0:
            raise GrowthRangeError(f"Growth exponent q must exceed 1, got {self.q}")

    def bound(self, t: np.ndarray) -> np.ndarray:
        return self.a1 + self.a2 * np.abs(t) ** (self.q - 1.0)

    def potential_bound(self, t: np.ndarray) -> np.ndarray:
        """a1 |t| + (a2/q) |t|^q."""
        return self.a1 * np.abs(t) + self.a2 / self.q * np.abs(t) ** self.q


@dataclass(frozen=True)
class SubquadraticCertificate:
    """F(t) <= b (1 + |t|^l) with l < 2."""

    b: float
    l: float

    def __post_init__(self) -> None:
        if self.b < 0:
            raise CertificateError(f"Subquadratic constant b must be >= 0, got {self.b}")
        if not 0.0 <= self.l < 2.0:
            raise CertificateError(f"Subquadratic exponent must lie in [0, 2), got {self.l}")

    def bound(self, t: np.ndarray) -> np.ndarray:
        return self.b * (1.0 + np.abs(t) ** self.l)


# =============================================================================
# Nonlinearity
# =============================================================================


@dataclass(frozen=True, eq=False)
class Nonlinearity:
    """
    A nonlinearity f with potential F(t) = int_0^t f.

    Build through the classmethods; `params` holds the kind-specific data.
    """

    kind: NonlinearityKind
    params: Dict[str, Any]
    growth: Optional[GrowthCertificate] = None
    sign: bool = False
    subquadratic: Optional[SubquadraticCertificate] = None
    zeta: Optional[float] = None
    m: Optional[float] = None
    base: Optional["Nonlinearity"] = None
    _table: Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]] = field(
        default=None, repr=False
    )

    # ------------------------------------------------------------------ builders

    @classmethod
    def power(
        cls,
        coefficient: float,
        exponent: float,
        growth: Optional[GrowthCertificate] = None,
        subquadratic: Optional[SubquadraticCertificate] = None,
    ) -> "Nonlinearity":
        """f(t) = c |t|^{q-2} t."""
        if exponent <= 1.0:
            raise GrowthRangeError(f"Power exponent must exceed 1, got {exponent}")
        if growth is None:
            growth = GrowthCertificate(0.0, abs(coefficient), exponent)
        if subquadratic is None and exponent < 2.0:
            subquadratic = SubquadraticCertificate(abs(coefficient) / exponent, exponent)
        return cls._checked(
            NonlinearityKind.POWER,
            {"coefficient": float(coefficient), "exponent": float(exponent)},
            growth=growth,
            sign=coefficient >= 0,
            subquadratic=subquadratic,
        )

    @classmethod
    def bump(
        cls,
        m: float,
        zeta: float,
        growth: Optional[GrowthCertificate] = None,
        sign: Optional[bool] = None,
        subquadratic: Optional[SubquadraticCertificate] = None,
    ) -> "Nonlinearity":
        """f(t) = t^m (zeta - t) for t >= 0, zero for t < 0."""
        if m <= 1.0 or zeta <= 0.0:
            raise CertificateError(f"Bump needs m > 1 and zeta > 0 (m={m}, zeta={zeta})")
        return cls._checked(
            NonlinearityKind.BUMP,
            {"m": float(m), "zeta": float(zeta)},
            growth=growth,
            sign=bool(sign) if sign is not None else False,
            subquadratic=subquadratic,
            zeta=float(zeta),
            m=float(m),
        )

    @classmethod
    def truncated(
        cls,
        base: "Nonlinearity",
        zeta: float,
        growth: Optional[GrowthCertificate] = None,
        sign: bool = True,
        subquadratic: Optional[SubquadraticCertificate] = None,
    ) -> "Nonlinearity":
        """f*(t) = f(t) on (0, zeta], zero elsewhere."""
        if zeta <= 0.0:
            raise CertificateError(f"Truncation level must be positive, got {zeta}")
        return cls._checked(
            NonlinearityKind.TRUNCATED,
            {"zeta": float(zeta), "base": base.kind.value},
            growth=growth,
            sign=sign,
            subquadratic=subquadratic,
            zeta=float(zeta),
            m=base.m,
            base=base,
        )

    @classmethod
    def tabulated(
        cls,
        nodes: Sequence[float],
        values: Sequence[float],
        growth: Optional[GrowthCertificate] = None,
        sign: bool = False,
        subquadratic: Optional[SubquadraticCertificate] = None,
    ) -> "Nonlinearity":
        """Piecewise-linear f through (t_k, f_k); zero outside the table."""
        t = np.asarray(nodes, dtype=float)
        v = np.asarray(values, dtype=float)
        if t.ndim != 1 or t.shape != v.shape or t.shape[0] < 2 or np.any(np.diff(t) <= 0):
            raise CertificateError("Tabulated nonlinearity needs >= 2 increasing nodes")
        # G(t_k) = int_{t_0}^{t_k} f, with f linear per segment
        primitive = np.concatenate([[0.0], cumulative_trapezoid(v, t)])
        return cls._checked(
            NonlinearityKind.TABULATED,
            {"nodes": t.tolist(), "values": v.tolist()},
            growth=growth,
            sign=sign,
            subquadratic=subquadratic,
            _table=(t, v, primitive),
        )

    @classmethod
    def polynomial(
        cls,
        coefficients: Sequence[float],
        growth: Optional[GrowthCertificate] = None,
        sign: bool = False,
        subquadratic: Optional[SubquadraticCertificate] = None,
    ) -> "Nonlinearity":
        """f(t) = sum_k c_k t^k (two-sided)."""
        return cls._checked(
            NonlinearityKind.POLYNOMIAL,
            {"coefficients": [float(c) for c in coefficients]},
            growth=growth,
            sign=sign,
            subquadratic=subquadratic,
        )

    @classmethod
    def zero(cls) -> "Nonlinearity":
        """f = 0."""
        return cls.polynomial(
            [0.0],
            growth=GrowthCertificate(0.0, 0.0, 2.0),
            sign=True,
            subquadratic=SubquadraticCertificate(0.0, 0.0),
        )

    @classmethod
    def _checked(cls, kind: NonlinearityKind, params: Dict[str, Any], **kwargs) -> "Nonlinearity":
        nl = cls(kind, params, **kwargs)
        nl.check_certificates()
        return nl

    # ---------------------------------------------------------------- evaluation

    @property
    def one_sided(self) -> bool:
        return self.kind in (NonlinearityKind.BUMP, NonlinearityKind.TRUNCATED)

    @property
    def vanishes_at_zero(self) -> bool:
        return abs(float(self.f(np.array([0.0]))[0])) == 0.0

    def f(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        kind = self.kind
        if kind is NonlinearityKind.POWER:
            c, q = self.params["coefficient"], self.params["exponent"]
            return c * np.sign(t) * np.abs(t) ** (q - 1.0)
        if kind is NonlinearityKind.BUMP:
            m, zeta = self.m, self.zeta
            tp = np.maximum(t, 0.0)
            return np.where(t > 0.0, tp**m * (zeta - tp), 0.0)
        if kind is NonlinearityKind.TRUNCATED:
            inside = (t > 0.0) & (t <= self.zeta)
            clipped = np.clip(t, 0.0, self.zeta)
            return np.where(inside, self.base.f(clipped), 0.0)
        if kind is NonlinearityKind.TABULATED:
            nodes, values, _ = self._table
            return np.interp(t, nodes, values, left=0.0, right=0.0)
        return Polynomial(self.params["coefficients"])(t)

    def F(self, t) -> np.ndarray:
        """Potential int_0^t f."""
        t = np.asarray(t, dtype=float)
        kind = self.kind
        if kind is NonlinearityKind.POWER:
            c, q = self.params["coefficient"], self.params["exponent"]
            return c * np.abs(t) ** q / q
        if kind is NonlinearityKind.BUMP:
            m, zeta = self.m, self.zeta
            tp = np.maximum(t, 0.0)
            return zeta * tp ** (m + 1) / (m + 1) - tp ** (m + 2) / (m + 2)
        if kind is NonlinearityKind.TRUNCATED:
            return self.base.F(np.clip(t, 0.0, self.zeta))
        if kind is NonlinearityKind.TABULATED:
            return self._tabulated_primitive(t) - self._tabulated_primitive(np.zeros(1))[0]
        return Polynomial(self.params["coefficients"]).integ()(t)

    def df(self, t) -> np.ndarray:
        """f'(t) (one-sided kinds: zero where f is cut off)."""
        t = np.asarray(t, dtype=float)
        kind = self.kind
        if kind is NonlinearityKind.POWER:
            c, q = self.params["coefficient"], self.params["exponent"]
            with np.errstate(divide="ignore"):
                return c * (q - 1.0) * np.abs(t) ** (q - 2.0)
        if kind is NonlinearityKind.BUMP:
            m, zeta = self.m, self.zeta
            tp = np.maximum(t, 0.0)
            return np.where(t > 0.0, m * tp ** (m - 1) * (zeta - tp) - tp**m, 0.0)
        if kind is NonlinearityKind.TRUNCATED:
            inside = (t > 0.0) & (t < self.zeta)
            return np.where(inside, self.base.df(np.clip(t, 0.0, self.zeta)), 0.0)
        if kind is NonlinearityKind.TABULATED:
            nodes, values, _ = self._table
            slopes = np.diff(values) / np.diff(nodes)
            seg = np.clip(np.searchsorted(nodes, t, side="right") - 1, 0, len(slopes) - 1)
            inside = (t >= nodes[0]) & (t <= nodes[-1])
            return np.where(inside, slopes[seg], 0.0)
        return Polynomial(self.params["coefficients"]).deriv()(t)

    def _tabulated_primitive(self, t: np.ndarray) -> np.ndarray:
        nodes, values, primitive = self._table
        tc = np.clip(t, nodes[0], nodes[-1])
        seg = np.clip(np.searchsorted(nodes, tc, side="right") - 1, 0, len(nodes) - 2)
        dt = tc - nodes[seg]
        slope = (values[seg + 1] - values[seg]) / (nodes[seg + 1] - nodes[seg])
        return primitive[seg] + values[seg] * dt + 0.5 * slope * dt**2

    # -------------------------------------------------------------- certificates

    def check_certificates(self) -> None:
        """
        Spot-check every declared certificate on the log grid.

        Raises:
            CertificateError: a declared bound fails at some sample
        """
        grid = CERTIFICATE_GRID
        samples = grid if self.one_sided else np.concatenate([grid, -grid])

        if self.growth is not None:
            excess = np.abs(self.f(samples)) - self.growth.bound(samples)
            tol = CERTIFICATE_SLACK * (1.0 + self.growth.bound(samples))
            if np.any(excess > tol):
                t_bad = float(samples[np.argmax(excess - tol)])
                raise CertificateError(
                    f"Growth certificate fails at t={t_bad:.6g}",
                    {"certificate": "growth", "t": t_bad},
                )
        if self.sign:
            values = self.F(grid)
            if np.any(values < -CERTIFICATE_SLACK * (1.0 + np.abs(values))):
                raise CertificateError(
                    "Sign certificate fails: F < 0 somewhere on [0, inf)",
                    {"certificate": "sign"},
                )
        if self.subquadratic is not None:
            bound = self.subquadratic.bound(samples)
            if np.any(self.F(samples) > bound + CERTIFICATE_SLACK * (1.0 + bound)):
                raise CertificateError(
                    "Subquadratic certificate fails", {"certificate": "subquadratic"}
                )
        if self.zeta is not None and self.m is not None and self.growth is not None:
            t = np.linspace(self.zeta * 1e-6, self.zeta, 513)
            bound = self.growth.a2 * t**self.m
            if np.any(self.f(t) > bound + CERTIFICATE_SLACK * (1.0 + bound)):
                logger.warning(
                    f"⚠️ f(t) <= a2 t^m fails on (0, zeta] for m={self.m:g}; "
                    "the gamma recommendation will be indicative only"
                )

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"kind": self.kind.value}
        for key, value in self.params.items():
            if key not in ("nodes", "values"):
                result[key] = value
        if self.growth is not None:
            result.update(a1=self.growth.a1, a2=self.growth.a2, q=self.growth.q)
        result["sign"] = self.sign
        if self.subquadratic is not None:
            result.update(b=self.subquadratic.b, l=self.subquadratic.l)
        return result


def potential_F(nonlinearity: Nonlinearity, t) -> np.ndarray:
    """F(t) = int_0^t f(xi) d xi."""
    return nonlinearity.F(t)


# =============================================================================
# Weight beta
# =============================================================================


class BetaField:
    """Constant weight, or nodal values on a regular grid interpolated linearly."""

    def __init__(
        self,
        constant: Optional[float] = None,
        axes: Optional[Sequence[np.ndarray]] = None,
        values: Optional[np.ndarray] = None,
    ):
        if constant is not None:
            self.constant: Optional[float] = float(constant)
            self._interpolator = None
            self.inf = self.sup = self.constant
        else:
            if axes is None or values is None:
                raise RangeError("BetaField needs a constant or grid axes and values")
            grid_values = np.asarray(values, dtype=float)
            self.constant = None
            self._interpolator = RegularGridInterpolator(
                tuple(np.asarray(a, dtype=float) for a in axes),
                grid_values,
                method="linear",
                bounds_error=False,
                fill_value=None,
            )
            self.inf = float(np.min(grid_values))
            self.sup = float(np.max(grid_values))

        if not self.inf > 0.0:
            raise RangeError(
                f"beta must be bounded below by a positive constant (min = {self.inf})",
                {"beta0": self.inf},
            )

    @classmethod
    def uniform(cls, value: float = 1.0) -> "BetaField":
        return cls(constant=value)

    @property
    def beta0(self) -> float:
        return self.inf

    def values(self, points) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if self.constant is not None:
            return np.full(pts.shape[0], self.constant)
        return np.asarray(self._interpolator(pts), dtype=float)

    def to_dict(self) -> Dict[str, Any]:
        if self.constant is not None:
            return {"constant": self.constant, "beta0": self.inf, "sup": self.sup}
        return {"grid": True, "beta0": self.inf, "sup": self.sup}


# =============================================================================
# Problem instance
# =============================================================================


class ProblemInstance:
    """
    The Galerkin problem A_{1/2} u = lambda beta f(u) on N modes.

    Everything below works in X-coordinates c (c_j = a_j lambda_j^{1/4}),
    where the energy inner product is Euclidean:
        u(nodes) = c @ S,  S = diag(lambda^{-1/4}) T
        J(c)     = |c|²/2 - lambda sum_k w_k beta_k F(u_k)
        grad J   = c - lambda S (w beta f(u))
        Hess J   = I - lambda S diag(w beta f'(u)) S^T
    """

    def __init__(
        self,
        domain: DomainSpec,
        beta: BetaField,
        nonlinearity: Nonlinearity,
        lam: float,
        modes: int,
        order: int = DEFAULT_ORDER,
    ):
        self.domain = domain
        self.beta = beta
        self.nonlinearity = nonlinearity
        self.lam = float(lam)
        self.modes = int(modes)
        self.order = int(order)

        self.basis = SpectralBasis(domain, self.modes)
        self.rule = self.basis.quadrature(self.order)
        self.table = self.basis.table(self.order)
        self.scaled_table = self.table / self.basis.quarter_powers[:, None]
        self.weighted_beta = self.rule.weights * beta.values(self.rule.nodes)

    # ------------------------------------------------------------------- copies

    def with_lambda(self, lam: float) -> "ProblemInstance":
        """Same tables, different lambda."""
        if lam < 0:
            raise RangeError(f"lambda must be >= 0, got {lam}")
        clone = copy.copy(self)
        clone.lam = float(lam)
        return clone

    @property
    def exploratory(self) -> bool:
        return self.nonlinearity.growth is None

    # ------------------------------------------------------- X-coordinate kernel

    def nodal(self, c: np.ndarray) -> np.ndarray:
        return c @ self.scaled_table

    def phi_x(self, c: np.ndarray) -> float:
        return 0.5 * float(np.dot(c, c))

    def psi_x(self, c: np.ndarray) -> float:
        return float(np.dot(self.weighted_beta, self.nonlinearity.F(self.nodal(c))))

    def energy_x(self, c: np.ndarray) -> float:
        return self.phi_x(c) - self.lam * self.psi_x(c)

    def gradient_x(self, c: np.ndarray) -> np.ndarray:
        forcing = self.weighted_beta * self.nonlinearity.f(self.nodal(c))
        return c - self.lam * (self.scaled_table @ forcing)

    def hessian_x(self, c: np.ndarray) -> np.ndarray:
        curvature = self.weighted_beta * self.nonlinearity.df(self.nodal(c))
        curvature = np.where(np.isfinite(curvature), curvature, 0.0)
        weighted = self.scaled_table * curvature
        return np.eye(self.modes) - self.lam * (weighted @ self.scaled_table.T)

    def energy_and_gradient_x(self, c: np.ndarray) -> Tuple[float, np.ndarray]:
        u = self.nodal(c)
        energy = 0.5 * float(np.dot(c, c)) - self.lam * float(
            np.dot(self.weighted_beta, self.nonlinearity.F(u))
        )
        forcing = self.weighted_beta * self.nonlinearity.f(u)
        return energy, c - self.lam * (self.scaled_table @ forcing)

    # -------------------------------------------------------------- field level

    def field(self, c: np.ndarray) -> SpectralField:
        return SpectralField.from_x_coordinates(self.basis, c)

    def phi(self, u: SpectralField) -> float:
        return self.phi_x(u.x_coordinates())

    def psi(self, u: SpectralField) -> float:
        return self.psi_x(u.x_coordinates())

    def trace_extrema(self, u: SpectralField) -> Tuple[float, float]:
        values = self.nodal(u.x_coordinates())
        return float(np.min(values)), float(np.max(values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.describe(),
            "lambda": self.lam,
            "modes": self.modes,
            "quadrature_order": self.order,
            "nodes": self.rule.size,
            "exploratory": self.exploratory,
        }


def create_problem_instance(
    domain: DomainSpec,
    beta: BetaField,
    nonlinearity: Nonlinearity,
    lam: float,
    modes: int = 64,
    order: int = DEFAULT_ORDER,
    logging_manager: Optional[Any] = None,
) -> ProblemInstance:
    """
    Factory function for ProblemInstance.

    Raises:
        RangeError: lambda < 0
        GrowthRangeError: certified growth exponent q >= 2n/(n-1)
    """
    log = logging_manager.get_logger("energy") if logging_manager else logger
    if lam < 0 or not math.isfinite(lam):
        raise RangeError(f"lambda must be a finite value >= 0, got {lam}", {"lambda": lam})

    p_crit = critical_exponent(domain.dimension)
    if nonlinearity.growth is None:
        log.warning(
            "⚠️ No growth certificate: exploratory mode, theorem checks disabled"
        )
    elif not (1.0 < nonlinearity.growth.q < p_crit):
        raise GrowthRangeError(
            f"Growth exponent q={nonlinearity.growth.q:g} outside (1, {p_crit:g})",
            {"q": nonlinearity.growth.q, "critical_exponent": p_crit},
        )

    log.debug(
        f"🏭 Creating ProblemInstance ({domain.describe()}, lambda={lam:g}, N={modes})"
    )
    return ProblemInstance(domain, beta, nonlinearity, lam, modes, order)


# =============================================================================
# Functional operations
# =============================================================================


def J_lambda(inst: ProblemInstance, u: SpectralField) -> float:
    """1/2 sum a_j² sqrt(lambda_j) - lambda int beta F(u)."""
    return inst.energy_x(u.x_coordinates())


def J_gradient(inst: ProblemInstance, u: SpectralField) -> SpectralField:
    """Riesz representer in the X inner product: a_j - lambda lambda_j^{-1/2} int beta f(u) phi_j."""
    return inst.field(inst.gradient_x(u.x_coordinates()))


def truncated_J(inst: ProblemInstance, gamma: float, u: SpectralField) -> float:
    """gamma² - lambda Psi(u) on {Phi <= gamma²}, J_lambda outside."""
    if gamma <= 0:
        raise RangeError(f"gamma must be positive, got {gamma}")
    c = u.x_coordinates()
    if inst.phi_x(c) <= gamma**2:
        return gamma**2 - inst.lam * inst.psi_x(c)
    return inst.energy_x(c)


def residual_norm(inst: ProblemInstance, u: SpectralField) -> float:
    """X-norm of the gradient representer (Galerkin-subspace dual norm of J')."""
    return float(np.linalg.norm(inst.gradient_x(u.x_coordinates())))


def sample_psi_sup(
    inst: ProblemInstance, r: float, samples: int = 200, seed: int = 0
) -> float:
    """
    Monte-Carlo lower estimate of sup{Psi(u) : Phi(u) <= r}.

    Half the samples lie on the sphere Phi = r, the rest inside; directions
    are Gaussian in X-coordinates.
    """
    if r <= 0:
        return 0.0
    rng = np.random.default_rng([int(seed), int(samples)])
    radius = math.sqrt(2.0 * r)
    best = 0.0
    for k in range(int(samples)):
        c = rng.standard_normal(inst.modes)
        c /= np.linalg.norm(c)
        scale = radius if k % 2 == 0 else radius * rng.uniform() ** (1.0 / inst.modes)
        for sign in (1.0, -1.0):
            best = max(best, inst.psi_x(sign * scale * c))
    return best


__all__ = [
    "NonlinearityKind",
    "GrowthCertificate",
    "SubquadraticCertificate",
    "Nonlinearity",
    "BetaField",
    "ProblemInstance",
    "create_problem_instance",
    "potential_F",
    "J_lambda",
    "J_gradient",
    "truncated_J",
    "residual_norm",
    "sample_psi_sup",
]
