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
Half-Pass Variational Package
----------------------------------------------------------------------------
FILE VERSION: v1.0-2-2.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 2 - Variational Core
CLEAN ARCHITECTURE: Compliant
============================================================================

- energy:      nonlinearities, weights, the functional J_lambda
- constants:   explicit constants, lambda*, the (mu1, mu2) window
- competitors: truncated cones and their cylinder lifts
- solvers:     local minimum, global minimum, mountain pass
"""

__version__ = "1.0.0"

from src.variational.energy import (
    BetaField,
    GrowthCertificate,
    Nonlinearity,
    NonlinearityKind,
    ProblemInstance,
    SubquadraticCertificate,
    J_gradient,
    J_lambda,
    create_problem_instance,
    potential_F,
    residual_norm,
    sample_psi_sup,
    truncated_J,
)
from src.variational.constants import (
    ConstantsBundle,
    LambdaStar,
    build_constants_bundle,
    exploratory_bundle,
    check_AI,
    check_AII,
    check_ball_inside,
    check_rho_gamma,
    chi_bound,
    coercivity_lower_bound,
    default_ball,
    evaluate_verdicts,
    geometry_constants,
    k_constants,
    lambda_star,
    mu1_value,
    mu2_value,
    mu_interval,
    psi_sup_bound,
    recommend_gamma,
    unit_ball_measure,
)
from src.variational.competitors import (
    ConeFunction,
    ConeLift,
    ProjectionResult,
    cone_gradient_energy,
    cone_l2,
    lift_energy,
    project_onto_basis,
)
from src.variational.solvers import (
    CriticalPoint,
    CriticalPointSolver,
    SolveReport,
    SolverSettings,
    create_critical_point_solver,
)

__all__ = [
    "__version__",
    # Energy
    "BetaField",
    "GrowthCertificate",
    "Nonlinearity",
    "NonlinearityKind",
    "ProblemInstance",
    "SubquadraticCertificate",
    "J_gradient",
    "J_lambda",
    "create_problem_instance",
    "potential_F",
    "residual_norm",
    "sample_psi_sup",
    "truncated_J",
    # Constants
    "ConstantsBundle",
    "LambdaStar",
    "build_constants_bundle",
    "exploratory_bundle",
    "check_AI",
    "check_AII",
    "check_ball_inside",
    "check_rho_gamma",
    "chi_bound",
    "coercivity_lower_bound",
    "default_ball",
    "evaluate_verdicts",
    "geometry_constants",
    "k_constants",
    "lambda_star",
    "mu1_value",
    "mu2_value",
    "mu_interval",
    "psi_sup_bound",
    "recommend_gamma",
    "unit_ball_measure",
    # Competitors
    "ConeFunction",
    "ConeLift",
    "ProjectionResult",
    "cone_gradient_energy",
    "cone_l2",
    "lift_energy",
    "project_onto_basis",
    # Solvers
    "CriticalPoint",
    "CriticalPointSolver",
    "SolveReport",
    "SolverSettings",
    "create_critical_point_solver",
]
