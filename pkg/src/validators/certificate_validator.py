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
Certificate and Hypothesis Validator
----------------------------------------------------------------------------
FILE VERSION: v1.0-4-4.2-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 4 - Verification
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Spot-check the declared certificates of a nonlinearity
- Collect the hypothesis verdicts of a ConstantsBundle as errors/warnings
- Sample the coercivity lower bound along random directions

In strict mode every warning is promoted to an error.

USAGE:
    validator = create_certificate_validator()
    result = validator.validate(nonlinearity, bundle, instance)
    for error in result.errors:
        print(f"❌ {error}")
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from src.errors import CertificateError
from src.spectral.function_space import critical_exponent
from src.variational.constants import ConstantsBundle, coercivity_lower_bound
from src.variational.energy import Nonlinearity, ProblemInstance

# Module version
__version__ = "v1.0-4-4.2-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Coercivity sampling
COERCIVITY_DIRECTIONS = 20
COERCIVITY_RADII = (1.0, 4.0, 16.0, 64.0, 256.0)
COERCIVITY_SLACK = 1e-9


# =============================================================================
# Data Classes
# =============================================================================


@dataclass
class CertificateValidationResult:
    """
    Attributes:
        is_valid: no errors were recorded
        errors: validation errors
        warnings: validation warnings
        checks: name -> True/False/None (None = not applicable)
    """

    is_valid: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_valid": self.is_valid,
            "errors": self.errors,
            "warnings": self.warnings,
            "checks": self.checks,
        }

    @property
    def error_count(self) -> int:
        return len(self.errors)

    @property
    def warning_count(self) -> int:
        return len(self.warnings)


# =============================================================================
# Certificate Validator
# =============================================================================


class CertificateValidator:
    """
    Validates nonlinearity certificates and the theorem hypotheses of a run.

    Attributes:
        strict_mode: If True, treat warnings as errors
        seed: seed for the coercivity directions
    """

    def __init__(
        self,
        strict_mode: bool = False,
        seed: int = 0,
        logger_instance: Optional[logging.Logger] = None,
    ):
        self.strict_mode = strict_mode
        self.seed = seed
        self._logger = logger_instance or logger

        self._logger.debug(
            f"CertificateValidator {__version__} initialized (strict_mode: {strict_mode})"
        )

    def validate(
        self,
        nonlinearity: Nonlinearity,
        bundle: Optional[ConstantsBundle] = None,
        instance: Optional[ProblemInstance] = None,
    ) -> CertificateValidationResult:
        errors: List[str] = []
        warnings: List[str] = []
        checks: Dict[str, Optional[bool]] = {}

        self._check_nonlinearity(nonlinearity, instance, errors, warnings, checks)
        if bundle is not None:
            self._check_bundle(bundle, errors, warnings, checks)
        if bundle is not None and instance is not None:
            self._check_coercivity(nonlinearity, bundle, instance, errors, checks)

        if self.strict_mode and warnings:
            errors.extend(f"(strict) {w}" for w in warnings)
            warnings = []

        result = CertificateValidationResult(
            is_valid=not errors, errors=errors, warnings=warnings, checks=checks
        )
        if result.is_valid:
            self._logger.debug(f"✅ Certificates valid ({result.warning_count} warnings)")
        else:
            self._logger.warning(f"❌ Certificate validation failed: {result.error_count} errors")
        return result

    # ----------------------------------------------------------- nonlinearity

    def _check_nonlinearity(
        self,
        nonlinearity: Nonlinearity,
        instance: Optional[ProblemInstance],
        errors: List[str],
        warnings: List[str],
        checks: Dict[str, Optional[bool]],
    ) -> None:
        try:
            nonlinearity.check_certificates()
            checks["certificates"] = True
        except CertificateError as e:
            checks["certificates"] = False
            errors.append(e.message)

        checks["f_vanishes_at_zero"] = nonlinearity.vanishes_at_zero
        if not nonlinearity.vanishes_at_zero:
            warnings.append("f(0) != 0: the zero function is not a solution")

        growth = nonlinearity.growth
        if growth is None:
            checks["growth_range"] = None
            warnings.append("No growth certificate: exploratory mode")
        elif instance is not None:
            p_crit = critical_exponent(instance.domain.dimension)
            checks["growth_range"] = 1.0 < growth.q < p_crit
            if not checks["growth_range"]:
                errors.append(f"Growth exponent q={growth.q:g} outside (1, {p_crit:g})")

        checks["AII"] = nonlinearity.subquadratic is not None
        if not checks["AII"]:
            warnings.append("No subquadratic certificate (AII): coercivity not guaranteed")

    # ---------------------------------------------------------------- bundle

    def _check_bundle(
        self,
        bundle: ConstantsBundle,
        errors: List[str],
        warnings: List[str],
        checks: Dict[str, Optional[bool]],
    ) -> None:
        checks["AI"] = bundle.ai_flag
        checks["tiau2"] = bundle.rho_gamma_flag
        checks["interval_valid"] = bundle.interval_valid
        checks["lambda_in_interval"] = bundle.lambda_in_interval if bundle.lam is not None else None

        if not bundle.ai_flag:
            warnings.append(f"(AI) fails for rho={bundle.rho:.6g}, gamma={bundle.gamma:.6g}")
        if not bundle.rho_gamma_flag:
            warnings.append(f"rho sqrt(g) <= gamma (rho={bundle.rho:.6g}, gamma={bundle.gamma:.6g})")
        if not bundle.interval_valid:
            warnings.append(f"Empty parameter window: mu1={bundle.mu1:.6g} >= mu2={bundle.mu2:.6g}")
        if bundle.ai_flag and bundle.interval_valid is False:
            # (AI) forces mu1 < mu2
            errors.append("(AI) holds but mu1 >= mu2: inconsistent constants")
        if bundle.lam is not None and not bundle.lambda_in_interval:
            warnings.append(f"lambda={bundle.lam:g} outside (mu1, mu2)")
        if not bundle.constants_certified:
            warnings.append("Embedding constants are numerical lower estimates (indicative)")

    # ------------------------------------------------------------ coercivity

    def _check_coercivity(
        self,
        nonlinearity: Nonlinearity,
        bundle: ConstantsBundle,
        instance: ProblemInstance,
        errors: List[str],
        checks: Dict[str, Optional[bool]],
    ) -> None:
        sub = nonlinearity.subquadratic
        if sub is None:
            checks["coercivity_bound"] = None
            return
        rng = np.random.default_rng([self.seed, COERCIVITY_DIRECTIONS])
        base = max(1.0, math.sqrt(2.0) * bundle.gamma)
        worst = math.inf
        for _ in range(COERCIVITY_DIRECTIONS):
            direction = rng.standard_normal(instance.modes)
            direction /= np.linalg.norm(direction)
            for factor in COERCIVITY_RADII:
                radius = factor * base
                energy = instance.energy_x(radius * direction)
                bound = coercivity_lower_bound(
                    radius, instance.lam, sub.b, sub.l, bundle.c2, bundle.beta_sup, bundle.measure
                )
                worst = min(worst, energy - bound + COERCIVITY_SLACK * max(1.0, abs(bound)))
        checks["coercivity_bound"] = worst >= 0.0
        if worst < 0.0:
            errors.append("Coercivity lower bound violated at a sampled point")


# =============================================================================
# Factory Function
# =============================================================================


def create_certificate_validator(
    strict_mode: bool = False,
    seed: int = 0,
    logger_instance: Optional[logging.Logger] = None,
) -> CertificateValidator:
    """Factory function for CertificateValidator."""
    return CertificateValidator(strict_mode=strict_mode, seed=seed, logger_instance=logger_instance)


__all__ = [
    "CertificateValidationResult",
    "CertificateValidator",
    "create_certificate_validator",
]
