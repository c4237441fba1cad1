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
Error Hierarchy for Half-Pass
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.0-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

Every library failure is a HalfPassError carrying a machine-readable code.
The CLI maps codes to exit statuses (see EXIT_CODES) and writes them into
the report's [error] section.
"""

from typing import Any, Dict, Optional

# Module version
__version__ = "v1.0-1-1.0-1"


class HalfPassError(Exception):
    """Base exception for all Half-Pass errors."""

    code: str = "INTERNAL"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for report serialization."""
        return {"code": self.code, "message": self.message, "details": self.details}


# =============================================================================
# Domain and basis errors
# =============================================================================


class UnsupportedDomainError(HalfPassError):
    """Raised for a domain kind or dimension without exact eigenpairs."""

    code = "UNSUPPORTED_DOMAIN"


class OutOfDomainError(HalfPassError):
    """Raised when an evaluation point lies outside the closed domain."""

    code = "OUT_OF_DOMAIN"


class RangeError(HalfPassError):
    """Raised when an index or exponent is outside its supported range."""

    code = "RANGE"


class CriticalExponentError(HalfPassError):
    """Raised when the trace embedding is requested at p = 2n/(n-1)."""

    code = "CRITICAL_EXPONENT"


class DivergentProfileError(HalfPassError):
    """Raised when a cylinder profile has infinite energy."""

    code = "DIVERGENT"


# =============================================================================
# Constants and nonlinearity errors
# =============================================================================


class GrowthRangeError(HalfPassError):
    """Raised when a growth exponent q is outside (1, 2n/(n-1))."""

    code = "GROWTH_RANGE"


class CertificateError(HalfPassError):
    """Raised when a nonlinearity certificate is contradicted by sampling."""

    code = "CERTIFICATE"


class PotentialNonpositiveError(HalfPassError):
    """Raised when F(rho) <= 0 where a positive potential is required."""

    code = "POTENTIAL_NONPOSITIVE"


class NoAdmissibleRhoError(HalfPassError):
    """Raised when F <= 0 on the whole scan interval (0, zeta]."""

    code = "NO_ADMISSIBLE_RHO"


class InternalInconsistencyError(HalfPassError):
    """Raised when an exact identity fails numerically."""

    code = "INTERNAL_INCONSISTENCY"


class ChainViolationError(HalfPassError):
    """Raised when a competitor inequality fails; details name the clause."""

    code = "CHAIN_VIOLATION"


# =============================================================================
# Solver errors
# =============================================================================


class PreconditionError(HalfPassError):
    """Raised when an operation is called outside its preconditions."""

    code = "PRECONDITION"


class NoConvergenceError(HalfPassError):
    """Raised when an iteration cap is reached before the residual tolerance."""

    code = "NO_CONVERGENCE"


class BoundaryMinimumError(HalfPassError):
    """Raised when the constrained minimizer sits on the gamma-sphere."""

    code = "BOUNDARY_MINIMUM"


class MountainPassCollapseError(HalfPassError):
    """Raised when the mountain-pass node converges onto an endpoint."""

    code = "MP_COLLAPSE"


class TheoremViolationError(HalfPassError):
    """Raised when a guaranteed conclusion fails under certified hypotheses."""

    code = "THEOREM_VIOLATION"


# =============================================================================
# Configuration errors
# =============================================================================


class ConfigError(HalfPassError):
    """Raised for malformed or incomplete run configurations."""

    code = "CONFIG"

    def __init__(
        self,
        message: str,
        key: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, details)
        self.key = key
        if key is not None:
            self.details.setdefault("key", key)


# =============================================================================
# Exit code mapping (used by main.py)
# =============================================================================

EXIT_CODES: Dict[str, int] = {
    ConfigError.code: 2,
    NoConvergenceError.code: 3,
    BoundaryMinimumError.code: 3,
    MountainPassCollapseError.code: 3,
    TheoremViolationError.code: 4,
    ChainViolationError.code: 4,
}


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit status (1 for anything unmapped)."""
    if isinstance(error, HalfPassError):
        return EXIT_CODES.get(error.code, 1)
    return 1


__all__ = [
    "HalfPassError",
    "UnsupportedDomainError",
    "OutOfDomainError",
    "RangeError",
    "CriticalExponentError",
    "DivergentProfileError",
    "GrowthRangeError",
    "CertificateError",
    "PotentialNonpositiveError",
    "NoAdmissibleRhoError",
    "InternalInconsistencyError",
    "ChainViolationError",
    "PreconditionError",
    "NoConvergenceError",
    "BoundaryMinimumError",
    "MountainPassCollapseError",
    "TheoremViolationError",
    "ConfigError",
    "EXIT_CODES",
    "exit_code_for",
]
