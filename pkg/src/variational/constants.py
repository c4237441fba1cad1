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
Explicit Constants and Parameter Thresholds
----------------------------------------------------------------------------
FILE VERSION: v1.0-2-2.2-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 2 - Variational Core
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- omega_n, g, h, K1, K2 and the interval (mu1, mu2)
- Hypothesis checks: the (AI) margin, rho sqrt(g) > gamma, B(x0, tau) in
  Omega, presence of a subquadratic certificate (coercivity)
- The chi bound and the sup bound on Psi over {Phi <= r}
- lambda* = 2^n h / (omega_n tau^n beta0) inf_{0<rho<=zeta} rho²/F(rho)
  and the recommended gamma
- ConstantsBundle: every scalar above plus verdicts and provenance

FORMULAS:
    g  = (2^n - 1) / 2^{n-1} tau^{n-2} omega_n
    h  = g + |Omega| / 8
    K1 = sqrt(2) c_1 h |beta|_inf / (omega_n beta0) (2/tau)^n
    K2 = 2^{q/2} c_q^q h |beta|_inf / (q omega_n beta0) (2/tau)^n
    mu1 = 2^n h / (omega_n tau^n beta0) rho² / F(rho)
    mu2 = 2^n / (tau^n omega_n beta0) h gamma / (a1 K1 + a2 K2 gamma^{q-1})
"""

import logging
import math
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from src.errors import (
    GrowthRangeError,
    NoAdmissibleRhoError,
    PotentialNonpositiveError,
    PreconditionError,
    RangeError,
)
from src.spectral.function_space import critical_exponent
from src.spectral.spectral_basis import DomainSpec
from src.variational.energy import Nonlinearity

# Module version
__version__ = "v1.0-2-2.2-1"

# Initialize logger
logger = logging.getLogger(__name__)

# lambda* scan
RHO_SCAN_POINTS = 4096
RHO_LIMIT_HALVINGS = 40

# Shrink factor applied to the recommended gamma so the strict inequalities hold
GAMMA_SAFETY = 0.5

# Default ball: tau = 0.99 dist(x0, boundary)
DEFAULT_BALL_FRACTION = 0.99

PotentialLike = Union[Nonlinearity, Callable[[float], float]]


def _potential(F: PotentialLike) -> Callable[[float], float]:
    if isinstance(F, Nonlinearity):
        return lambda t: float(F.F(np.array([t]))[0])
    return lambda t: float(F(t))


# =============================================================================
# Geometry
# =============================================================================


def unit_ball_measure(n: int) -> float:
    """Lebesgue measure of the unit ball via omega_n = (2 pi / n) omega_{n-2}."""
    if n < 1:
        raise RangeError(f"Dimension must be >= 1, got {n}")
    omega = 2.0 if n % 2 == 1 else math.pi
    for k in range(3 if n % 2 == 1 else 4, n + 1, 2):
        omega *= 2.0 * math.pi / k
    return omega


def geometry_constants(n: int, tau: float, measure: float) -> Tuple[float, float]:
    """(g, h) for a ball of radius tau in a domain of the given measure."""
    if tau <= 0:
        raise RangeError(f"tau must be positive, got {tau}")
    g = (2.0**n - 1.0) / 2.0 ** (n - 1) * tau ** (n - 2) * unit_ball_measure(n)
    return g, g + measure / 8.0


def k_constants(
    n: int,
    tau: float,
    beta0: float,
    beta_sup: float,
    c1: float,
    cq: float,
    q: float,
    h: float,
) -> Tuple[float, float]:
    """
    (K1, K2).

    Raises:
        GrowthRangeError: q outside (1, 2n/(n-1))
        RangeError: a nonpositive input
    """
    p_crit = critical_exponent(n)
    if not (1.0 < q < p_crit):
        raise GrowthRangeError(
            f"q={q:g} outside (1, {p_crit:g})", {"q": q, "critical_exponent": p_crit}
        )
    for name, value in (("tau", tau), ("beta0", beta0), ("beta_sup", beta_sup),
                        ("c1", c1), ("cq", cq), ("h", h)):
        if not value > 0:
            raise RangeError(f"{name} must be positive, got {value}", {name: value})
    omega = unit_ball_measure(n)
    scale = h * beta_sup / (omega * beta0) * (2.0 / tau) ** n
    k1 = math.sqrt(2.0) * c1 * scale
    k2 = 2.0 ** (q / 2.0) * cq**q / q * scale
    return k1, k2


def check_ball_inside(domain: DomainSpec, x0, tau: float) -> bool:
    """True when B(x0, tau) lies in Omega."""
    try:
        return 0.0 < tau <= domain.distance_to_boundary(x0) * (1.0 + 1e-12)
    except Exception:
        return False


def default_ball(domain: DomainSpec) -> Tuple[np.ndarray, float]:
    """(centroid, 0.99 dist(centroid, boundary))."""
    x0 = domain.centroid
    return x0, DEFAULT_BALL_FRACTION * domain.distance_to_boundary(x0)


# =============================================================================
# Interval and hypotheses
# =============================================================================


def mu2_value(
    n: int, tau: float, beta0: float, h: float, gamma: float,
    a1: float, a2: float, q: float, k1: float, k2: float,
) -> float:
    if gamma <= 0:
        raise RangeError(f"gamma must be positive, got {gamma}")
    denominator = a1 * k1 + a2 * k2 * gamma ** (q - 1.0)
    if denominator <= 0.0:
        return math.inf
    return 2.0**n / (tau**n * unit_ball_measure(n) * beta0) * h * gamma / denominator


def mu1_value(n: int, tau: float, beta0: float, h: float, rho: float, F: PotentialLike) -> float:
    """
    Raises:
        PotentialNonpositiveError: F(rho) <= 0
    """
    if rho <= 0:
        raise RangeError(f"rho must be positive, got {rho}")
    value = _potential(F)(rho)
    if not value > 0.0:
        raise PotentialNonpositiveError(
            f"F(rho) = {value:.6g} <= 0 at rho = {rho:g}", {"rho": rho, "F": value}
        )
    return 2.0**n * h / (unit_ball_measure(n) * tau**n * beta0) * rho**2 / value


def check_AI(
    rho: float, gamma: float, a1: float, a2: float, q: float,
    k1: float, k2: float, F: PotentialLike,
) -> Tuple[bool, float]:
    """(flag, margin) with margin = F(rho)/rho² - (a1 K1/gamma + a2 K2 gamma^{q-2})."""
    if rho <= 0 or gamma <= 0:
        raise RangeError("rho and gamma must be positive")
    margin = _potential(F)(rho) / rho**2 - (a1 * k1 / gamma + a2 * k2 * gamma ** (q - 2.0))
    return margin > 0.0, margin


def check_rho_gamma(rho: float, gamma: float, g: float) -> bool:
    """rho sqrt(g) > gamma (strict)."""
    return rho * math.sqrt(g) > gamma


def check_AII(nonlinearity: Nonlinearity) -> bool:
    """A subquadratic certificate F <= b(1 + |t|^l), l < 2, is present."""
    return nonlinearity.subquadratic is not None


def chi_bound(
    r: float, a1: float, a2: float, q: float, c1: float, cq: float, beta_sup: float
) -> float:
    """sqrt(2/r) a1 c1 |beta| + 2^{q/2} a2 c_q^q / q r^{q/2-1} |beta|."""
    if r <= 0:
        raise RangeError(f"r must be positive, got {r}")
    return (
        math.sqrt(2.0 / r) * a1 * c1 * beta_sup
        + 2.0 ** (q / 2.0) * a2 * cq**q / q * r ** (q / 2.0 - 1.0) * beta_sup
    )


def psi_sup_bound(
    r: float, a1: float, a2: float, q: float, c1: float, cq: float, beta_sup: float
) -> float:
    """Upper bound on sup{Psi : Phi <= r}: sqrt(2r) a1 c1 |beta| + (2r)^{q/2} a2 c_q^q |beta| / q."""
    if r <= 0:
        return 0.0
    return r * chi_bound(r, a1, a2, q, c1, cq, beta_sup)


def coercivity_lower_bound(
    norm: float, lam: float, b: float, l: float, c2: float, beta_sup: float, measure: float
) -> float:
    """1/2 |w|² - lam b c2^l |beta| |Omega|^{(2-l)/2} |w|^l - lam b |beta| |Omega|."""
    return (
        0.5 * norm**2
        - lam * b * c2**l * beta_sup * measure ** ((2.0 - l) / 2.0) * norm**l
        - lam * b * beta_sup * measure
    )


# =============================================================================
# lambda* and gamma
# =============================================================================


@dataclass
class LambdaStar:
    """Threshold of the positive-solutions theorem and its minimizing rho."""

    value: float
    rho_bar: float
    inf_ratio: float
    prefactor: float
    limit_at_zero: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def lambda_star(
    n: int, tau: float, beta0: float, measure: float, zeta: float, F: PotentialLike
) -> LambdaStar:
    """
    2^n h / (omega_n tau^n beta0) * inf_{0<rho<=zeta} rho²/F(rho).

    The inf is located by a 4096-point scan of F(rho)/rho² followed by a
    bounded Brent refinement around the best sample. When the best sample is
    the first one, rho is halved until the ratio stops growing.

    Raises:
        NoAdmissibleRhoError: F <= 0 on all of (0, zeta]
    """
    if zeta <= 0:
        raise RangeError(f"zeta must be positive, got {zeta}")
    potential = _potential(F)
    _, h = geometry_constants(n, tau, measure)
    prefactor = 2.0**n * h / (unit_ball_measure(n) * tau**n * beta0)

    rho = zeta * np.arange(1, RHO_SCAN_POINTS + 1) / RHO_SCAN_POINTS
    ratio = np.array([potential(r) for r in rho]) / rho**2
    best = int(np.argmax(ratio))
    if not ratio[best] > 0.0:
        raise NoAdmissibleRhoError(
            f"F <= 0 on (0, {zeta:g}]: no admissible rho", {"zeta": zeta}
        )

    limit = False
    if best == 0:
        r, value = float(rho[0]), float(ratio[0])
        for _ in range(RHO_LIMIT_HALVINGS):
            trial = 0.5 * r
            trial_value = potential(trial) / trial**2
            if trial_value <= value:
                break
            r, value = trial, trial_value
        else:
            limit = True
        rho_bar, sup_ratio = r, value
    else:
        lo = float(rho[best - 1])
        hi = float(rho[min(best + 1, RHO_SCAN_POINTS - 1)])
        result = minimize_scalar(
            lambda r: -potential(r) / r**2,
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        rho_bar, sup_ratio = float(rho[best]), float(ratio[best])
        if result.success and -result.fun > sup_ratio:
            rho_bar, sup_ratio = float(result.x), float(-result.fun)

    inf_ratio = 1.0 / sup_ratio
    return LambdaStar(
        value=prefactor * inf_ratio,
        rho_bar=rho_bar,
        inf_ratio=inf_ratio,
        prefactor=prefactor,
        limit_at_zero=limit,
    )


def recommend_gamma(
    n: int, tau: float, beta0: float, h: float, g: float, rho_bar: float,
    a2: float, k2: float, lam: float, m: float, safety: float = GAMMA_SAFETY,
) -> float:
    """safety * min{sqrt(g) rho_bar, (2^n h / (a2 omega_n tau^n beta0 K2 lam))^{1/(m-1)}}."""
    candidates = [math.sqrt(g) * rho_bar]
    if a2 > 0 and k2 > 0 and lam > 0 and m > 1:
        base = 2.0**n * h / (a2 * unit_ball_measure(n) * tau**n * beta0 * k2 * lam)
        candidates.append(base ** (1.0 / (m - 1.0)))
    return safety * min(candidates)


# =============================================================================
# Bundle
# =============================================================================


@dataclass
class ConstantsBundle:
    """
    Every explicit scalar of the multiplicity argument.

    mu1/mu2/verdict fields stay None until the potential-dependent pieces
    are evaluated (see build_constants_bundle).
    """

    dimension: int
    tau: float
    x0: Tuple[float, ...]
    omega: float
    g: float
    h: float
    measure: float
    beta0: float
    beta_sup: float
    c1: float
    cq: float
    c2: float
    a1: float
    a2: float
    q: float
    K1: float
    K2: float
    gamma: float
    rho: float
    lam: Optional[float] = None
    mu1: Optional[float] = None
    mu2: Optional[float] = None
    interval_valid: Optional[bool] = None
    lambda_star: Optional[float] = None
    rho_bar: Optional[float] = None
    ai_flag: Optional[bool] = None
    ai_margin: Optional[float] = None
    rho_gamma_flag: Optional[bool] = None
    aii_flag: Optional[bool] = None
    constants_certified: bool = False
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def provenance(self) -> str:
        return "certified" if self.constants_certified else "indicative"

    @property
    def lambda_in_interval(self) -> bool:
        return (
            self.lam is not None
            and self.mu1 is not None
            and self.mu2 is not None
            and self.mu1 < self.lam < self.mu2
        )

    def to_dict(self) -> Dict[str, Any]:
        result = asdict(self)
        result["x0"] = list(self.x0)
        result["provenance"] = self.provenance
        result["lambda_in_interval"] = self.lambda_in_interval
        return result


def build_constants_bundle(
    domain: DomainSpec,
    beta0: float,
    beta_sup: float,
    nonlinearity: Nonlinearity,
    c1: float,
    cq: float,
    c2: float,
    gamma: Optional[float] = None,
    rho: Optional[float] = None,
    lam: Optional[float] = None,
    tau: Optional[float] = None,
    x0=None,
    constants_certified: bool = False,
) -> ConstantsBundle:
    """
    Assemble the bundle; gamma/rho None means "recommend".

    rho defaults to rho_bar from the lambda* scan (on (0, zeta] when zeta is
    known, else on (0, 1]); gamma defaults to recommend_gamma at lam (or
    2 lambda* when lam is None too).

    Raises:
        PreconditionError: B(x0, tau) not inside Omega, or no growth certificate
    """
    n = domain.dimension
    if x0 is None or tau is None:
        default_x0, default_tau = default_ball(domain)
        x0 = default_x0 if x0 is None else np.asarray(x0, dtype=float)
        tau = default_tau if tau is None else float(tau)
    x0 = np.asarray(x0, dtype=float)
    if not check_ball_inside(domain, x0, tau):
        raise PreconditionError(
            f"B(x0={x0.tolist()}, tau={tau:g}) is not contained in {domain.describe()}",
            {"x0": x0.tolist(), "tau": tau},
        )
    growth = nonlinearity.growth
    if growth is None:
        raise PreconditionError("Constants need a growth certificate (a1, a2, q)")

    g, h = geometry_constants(n, tau, domain.measure)
    k1, k2 = k_constants(n, tau, beta0, beta_sup, c1, cq, growth.q, h)

    zeta = nonlinearity.zeta if nonlinearity.zeta is not None else 1.0
    star = lambda_star(n, tau, beta0, domain.measure, zeta, nonlinearity)
    notes: Dict[str, str] = {}

    if rho is None:
        rho = star.rho_bar
        notes["rho"] = "auto: minimizer of rho²/F(rho)"
    if gamma is None:
        lam_for_gamma = lam if lam is not None else 2.0 * star.value
        m = nonlinearity.m if nonlinearity.m is not None else growth.q - 1.0
        gamma = recommend_gamma(n, tau, beta0, h, g, rho, growth.a2, k2, lam_for_gamma, m)
        notes["gamma"] = f"auto: recommended at lambda={lam_for_gamma:.12g}"

    bundle = ConstantsBundle(
        dimension=n,
        tau=float(tau),
        x0=tuple(float(v) for v in x0),
        omega=unit_ball_measure(n),
        g=g,
        h=h,
        measure=domain.measure,
        beta0=beta0,
        beta_sup=beta_sup,
        c1=c1,
        cq=cq,
        c2=c2,
        a1=growth.a1,
        a2=growth.a2,
        q=growth.q,
        K1=k1,
        K2=k2,
        gamma=float(gamma),
        rho=float(rho),
        lam=lam,
        lambda_star=star.value,
        rho_bar=star.rho_bar,
        constants_certified=constants_certified,
        notes=notes,
    )
    return evaluate_verdicts(bundle, nonlinearity)


def evaluate_verdicts(bundle: ConstantsBundle, nonlinearity: Nonlinearity) -> ConstantsBundle:
    """Fill mu1, mu2 and the hypothesis flags (returns a new bundle)."""
    n, b = bundle.dimension, bundle
    mu2 = mu2_value(n, b.tau, b.beta0, b.h, b.gamma, b.a1, b.a2, b.q, b.K1, b.K2)
    try:
        mu1 = mu1_value(n, b.tau, b.beta0, b.h, b.rho, nonlinearity)
    except PotentialNonpositiveError:
        mu1 = math.inf
    ai_flag, ai_margin = check_AI(b.rho, b.gamma, b.a1, b.a2, b.q, b.K1, b.K2, nonlinearity)
    return replace(
        bundle,
        mu1=mu1,
        mu2=mu2,
        interval_valid=mu1 < mu2,
        ai_flag=ai_flag,
        ai_margin=ai_margin,
        rho_gamma_flag=check_rho_gamma(b.rho, b.gamma, b.g),
        aii_flag=check_AII(nonlinearity),
    )


def exploratory_bundle(
    domain: DomainSpec,
    gamma: float,
    beta0: float,
    beta_sup: float,
    rho: Optional[float] = None,
    lam: Optional[float] = None,
    tau: Optional[float] = None,
    x0=None,
) -> ConstantsBundle:
    """
    Geometry-only bundle for nonlinearities without a growth certificate.

    Constants that need (a1, a2, q) are NaN and every verdict is False, so
    the solver never takes the guarantee path.

    Raises:
        PreconditionError: B(x0, tau) not inside Omega, or gamma <= 0
    """
    if not gamma > 0:
        raise PreconditionError(f"gamma must be positive, got {gamma}")
    if x0 is None or tau is None:
        default_x0, default_tau = default_ball(domain)
        x0 = default_x0 if x0 is None else x0
        tau = default_tau if tau is None else float(tau)
    x0 = np.asarray(x0, dtype=float)
    if not check_ball_inside(domain, x0, tau):
        raise PreconditionError(
            f"B(x0={x0.tolist()}, tau={tau:g}) is not contained in {domain.describe()}",
            {"x0": x0.tolist(), "tau": tau},
        )
    n = domain.dimension
    g, h = geometry_constants(n, tau, domain.measure)
    nan = math.nan
    return ConstantsBundle(
        dimension=n,
        tau=float(tau),
        x0=tuple(float(v) for v in x0),
        omega=unit_ball_measure(n),
        g=g,
        h=h,
        measure=domain.measure,
        beta0=beta0,
        beta_sup=beta_sup,
        c1=nan,
        cq=nan,
        c2=nan,
        a1=nan,
        a2=nan,
        q=nan,
        K1=nan,
        K2=nan,
        gamma=float(gamma),
        rho=float(rho) if rho is not None else 1.0,
        lam=lam,
        interval_valid=False,
        ai_flag=False,
        rho_gamma_flag=False,
        aii_flag=False,
        notes={"mode": "exploratory: no growth certificate"},
    )


def mu_interval(bundle: ConstantsBundle, F: PotentialLike) -> Tuple[float, float, bool]:
    """
    (mu1, mu2, mu1 < mu2) for the bundle's gamma and rho.

    Raises:
        PotentialNonpositiveError: F(rho) <= 0
    """
    b = bundle
    mu1 = mu1_value(b.dimension, b.tau, b.beta0, b.h, b.rho, F)
    mu2 = mu2_value(b.dimension, b.tau, b.beta0, b.h, b.gamma, b.a1, b.a2, b.q, b.K1, b.K2)
    return mu1, mu2, mu1 < mu2


__all__ = [
    "unit_ball_measure",
    "geometry_constants",
    "k_constants",
    "check_ball_inside",
    "default_ball",
    "mu1_value",
    "mu2_value",
    "mu_interval",
    "check_AI",
    "check_AII",
    "check_rho_gamma",
    "chi_bound",
    "psi_sup_bound",
    "coercivity_lower_bound",
    "LambdaStar",
    "lambda_star",
    "recommend_gamma",
    "ConstantsBundle",
    "build_constants_bundle",
    "exploratory_bundle",
    "evaluate_verdicts",
]
