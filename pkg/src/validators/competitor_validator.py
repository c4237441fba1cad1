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
Competitor Chain Validator
----------------------------------------------------------------------------
FILE VERSION: v1.0-4-4.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 4 - Verification
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Certify the three inequalities the truncated-cone competitor must satisfy
- Gate the comparison clause on lambda lying in (mu1, mu2)
- Report the analytic sup bound on Psi next to a Monte-Carlo lower estimate

CLAUSES:
    phi         Phi(w) > gamma²
    psi         Psi(w) >= beta0 omega_n (tau/2)^n F(rho)       (1e-6 relative slack)
    comparison  J(w) < gamma² - lambda sup{Psi : Phi <= gamma²} (analytic bound)

A clause is PASSED, FAILED or SKIPPED. Any FAILED clause raises
ChainViolationError naming it, unless raise_on_failure=False.

USAGE:
    validator = create_competitor_validator()
    report = validator.verify(bundle, nonlinearity, lam)
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from src.errors import ChainViolationError, PreconditionError
from src.spectral.quadrature import DEFAULT_ORDER
from src.variational.competitors import ConeFunction, ConeLift, lift_energy
from src.variational.constants import ConstantsBundle, check_rho_gamma, psi_sup_bound
from src.variational.energy import (
    BetaField,
    Nonlinearity,
    create_problem_instance,
    sample_psi_sup,
)

# Module version
__version__ = "v1.0-4-4.1-1"

# Initialize logger
logger = logging.getLogger(__name__)

PSI_RELATIVE_SLACK = 1e-6

# Galerkin size for the Monte-Carlo sup estimate
SAMPLING_MODES = 32
SAMPLING_DRAWS = 200


# =============================================================================
# Data Classes
# =============================================================================


class ClauseStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class ClauseResult:
    """
    One inequality of the chain.

    Attributes:
        name: clause identifier (phi, psi, comparison)
        status: passed, failed or skipped
        lhs: left-hand side value
        rhs: right-hand side value
        margin: signed slack, positive when the clause holds
        message: human-readable statement
    """

    name: str
    status: ClauseStatus
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    margin: Optional[float] = None
    message: str = ""

    @property
    def failed(self) -> bool:
        return self.status is ClauseStatus.FAILED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "message": self.message,
        }


@dataclass
class ChainReport:
    """All clauses plus the quantities they were built from."""

    clauses: List[ClauseResult]
    lam: float
    phi: float
    psi: float
    energy: float
    psi_sup_bound: float
    psi_sup_sampled: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.clauses)

    @property
    def failed_clauses(self) -> List[str]:
        return [c.name for c in self.clauses if c.failed]

    def clause(self, name: str) -> Optional[ClauseResult]:
        return next((c for c in self.clauses if c.name == name), None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "lambda": self.lam,
            "phi": self.phi,
            "psi": self.psi,
            "energy": self.energy,
            "psi_sup_bound": self.psi_sup_bound,
            "psi_sup_sampled": self.psi_sup_sampled,
            "clauses": [c.to_dict() for c in self.clauses],
            "details": dict(self.details),
        }


# =============================================================================
# Competitor Validator
# =============================================================================


class CompetitorValidator:
    """
    Verifies the competitor inequalities for one bundle and one lambda.

    Attributes:
        order: quadrature order for Psi of the cone
        samples: Monte-Carlo draws for the sup estimate (0 disables it)
        seed: sampling seed
    """

    def __init__(
        self,
        order: int = DEFAULT_ORDER,
        samples: int = SAMPLING_DRAWS,
        seed: int = 0,
        logger_instance: Optional[logging.Logger] = None,
    ):
        self.order = order
        self.samples = samples
        self.seed = seed
        self._logger = logger_instance or logger

        self._logger.debug(
            f"CompetitorValidator {__version__} initialized (order={order}, samples={samples})"
        )

    def verify(
        self,
        bundle: ConstantsBundle,
        nonlinearity: Nonlinearity,
        lam: float,
        domain,
        beta: Optional[BetaField] = None,
        raise_on_failure: bool = True,
    ) -> ChainReport:
        """
        Evaluate every clause.

        Raises:
            PreconditionError: rho sqrt(g) <= gamma, or F lacks the sign condition
            ChainViolationError: a certified clause fails (raise_on_failure)
        """
        if not check_rho_gamma(bundle.rho, bundle.gamma, bundle.g):
            raise PreconditionError(
                f"rho sqrt(g) = {bundle.rho * math.sqrt(bundle.g):.6g} does not exceed "
                f"gamma = {bundle.gamma:.6g}",
                {"rho": bundle.rho, "gamma": bundle.gamma, "g": bundle.g},
            )
        if not nonlinearity.sign:
            raise PreconditionError("Competitor chain needs F >= 0 on [0, inf) (sign certificate)")

        beta = beta or BetaField.uniform(bundle.beta0)
        cone = ConeFunction(domain, np.asarray(bundle.x0), bundle.tau, bundle.rho)
        phi = 0.5 * lift_energy(ConeLift(cone))

        # Psi of the competitor: its trace is the cone itself
        instance = create_problem_instance(domain, beta, nonlinearity, lam, SAMPLING_MODES, self.order)
        nodes = instance.rule.nodes
        psi = float(np.dot(instance.weighted_beta, nonlinearity.F(cone.values(nodes))))
        energy = phi - lam * psi

        gamma_sq = bundle.gamma**2
        clauses: List[ClauseResult] = []

        clauses.append(
            self._clause(
                "phi",
                phi,
                gamma_sq,
                phi > gamma_sq,
                f"Phi(w) = {phi:.12g} > gamma² = {gamma_sq:.12g}",
            )
        )

        psi_floor = (
            bundle.beta0 * bundle.omega * (0.5 * bundle.tau) ** bundle.dimension
            * float(nonlinearity.F(np.array([bundle.rho]))[0])
        )
        clauses.append(
            self._clause(
                "psi",
                psi,
                psi_floor,
                psi >= psi_floor * (1.0 - PSI_RELATIVE_SLACK),
                f"Psi(w) = {psi:.12g} >= beta0 omega_n (tau/2)^n F(rho) = {psi_floor:.12g}",
            )
        )

        sup_bound = psi_sup_bound(
            gamma_sq, bundle.a1, bundle.a2, bundle.q, bundle.c1, bundle.cq, bundle.beta_sup
        )
        ceiling = gamma_sq - lam * sup_bound
        in_window = (
            bundle.mu1 is not None and bundle.mu2 is not None and bundle.mu1 < lam < bundle.mu2
        )
        if in_window:
            clauses.append(
                self._clause(
                    "comparison",
                    energy,
                    ceiling,
                    energy < ceiling,
                    f"J(w) = {energy:.12g} < gamma² - lambda sup Psi = {ceiling:.12g}",
                )
            )
        else:
            clauses.append(
                ClauseResult(
                    name="comparison",
                    status=ClauseStatus.SKIPPED,
                    lhs=energy,
                    rhs=ceiling,
                    message=f"lambda = {lam:g} outside (mu1, mu2); clause not asserted",
                )
            )

        sampled = None
        if self.samples > 0:
            sampled = sample_psi_sup(instance, gamma_sq, self.samples, self.seed)
            if sampled > sup_bound * (1.0 + 1e-9):
                self._logger.warning(
                    f"⚠️ Sampled sup Psi {sampled:.6g} exceeds the analytic bound {sup_bound:.6g}; "
                    "check the embedding constants"
                )

        report = ChainReport(
            clauses=clauses,
            lam=float(lam),
            phi=phi,
            psi=psi,
            energy=energy,
            psi_sup_bound=sup_bound,
            psi_sup_sampled=sampled,
            details={"provenance": bundle.provenance, "psi_floor": psi_floor},
        )

        if report.passed:
            self._logger.debug(f"✅ Competitor chain holds at lambda={lam:g}")
        elif raise_on_failure:
            first = report.failed_clauses[0]
            raise ChainViolationError(
                f"Competitor clause '{first}' fails: {report.clause(first).message}",
                {"clause": first, "report": report.to_dict()},
            )
        else:
            self._logger.warning(f"❌ Competitor clauses failed: {report.failed_clauses}")
        return report

    @staticmethod
    def _clause(name: str, lhs: float, rhs: float, holds: bool, message: str) -> ClauseResult:
        margin = (lhs - rhs) if name != "comparison" else (rhs - lhs)
        return ClauseResult(
            name=name,
            status=ClauseStatus.PASSED if holds else ClauseStatus.FAILED,
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            message=message,
        )


# =============================================================================
# Factory Function
# =============================================================================


def create_competitor_validator(
    order: int = DEFAULT_ORDER,
    samples: int = SAMPLING_DRAWS,
    seed: int = 0,
    logger_instance: Optional[logging.Logger] = None,
) -> CompetitorValidator:
    """Factory function for CompetitorValidator."""
    return CompetitorValidator(order=order, samples=samples, seed=seed, logger_instance=logger_instance)


def verify_competitor_chain(
    bundle: ConstantsBundle,
    nonlinearity: Nonlinearity,
    lam: float,
    domain,
    beta: Optional[BetaField] = None,
    order: int = DEFAULT_ORDER,
    samples: int = SAMPLING_DRAWS,
    seed: int = 0,
) -> ChainReport:
    """Module-level shortcut: raise on the first failing clause."""
    return create_competitor_validator(order, samples, seed).verify(
        bundle, nonlinearity, lam, domain, beta
    )


__all__ = [
    "ClauseStatus",
    "ClauseResult",
    "ChainReport",
    "CompetitorValidator",
    "create_competitor_validator",
    "verify_competitor_chain",
]
