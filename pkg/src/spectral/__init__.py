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
Half-Pass Spectral Package
----------------------------------------------------------------------------
FILE VERSION: v1.0-1-1.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 1 - Spectral Foundation
CLEAN ARCHITECTURE: Compliant
============================================================================

- spectral_basis: Dirichlet eigenpairs of rectangles, boxes and disks
- quadrature:     tensor Gauss-Legendre and polar rules
- function_space: spectral fields, the H^{1/2}_0 norm, trace embeddings
- extension:      harmonic extension and the Dirichlet-to-Neumann map

USAGE:
    from src.spectral import DomainSpec, SpectralBasis, SpectralField

    basis = SpectralBasis(DomainSpec.disk(1.0), 64)
    u = SpectralField.mode(basis, 0)
"""

__version__ = "1.0.0"

from src.spectral.spectral_basis import (
    DomainKind,
    DomainSpec,
    EigenPair,
    Parity,
    bessel_j_zero,
    eigenpairs,
    eval_eigenfunction,
    eval_eigenfunction_gradient,
    mode_gradient_table,
    mode_table,
)
from src.spectral.quadrature import (
    DEFAULT_ORDER,
    QuadratureRule,
    build_quadrature,
    midpoint_grid,
)
from src.spectral.function_space import (
    EmbeddingConstants,
    SpectralBasis,
    SpectralField,
    apply_sqrt_laplacian,
    critical_exponent,
    embedding_ladder,
    estimate_embedding_constant,
    h_half_norm,
    lp_trace_norm,
    x_distance,
    x_inner,
)
from src.spectral.extension import (
    CallableProfile,
    CylinderField,
    ExponentialProfile,
    ProfileTag,
    cylinder_energy,
    dirichlet_to_neumann,
    evaluate_window,
    extend,
    trace,
    window_depth,
)

__all__ = [
    "__version__",
    # Basis
    "DomainKind",
    "DomainSpec",
    "EigenPair",
    "Parity",
    "bessel_j_zero",
    "eigenpairs",
    "eval_eigenfunction",
    "eval_eigenfunction_gradient",
    "mode_gradient_table",
    "mode_table",
    # Quadrature
    "DEFAULT_ORDER",
    "QuadratureRule",
    "build_quadrature",
    "midpoint_grid",
    # Function space
    "EmbeddingConstants",
    "SpectralBasis",
    "SpectralField",
    "apply_sqrt_laplacian",
    "critical_exponent",
    "embedding_ladder",
    "estimate_embedding_constant",
    "h_half_norm",
    "lp_trace_norm",
    "x_distance",
    "x_inner",
    # Extension
    "CallableProfile",
    "CylinderField",
    "ExponentialProfile",
    "ProfileTag",
    "cylinder_energy",
    "dirichlet_to_neumann",
    "evaluate_window",
    "extend",
    "trace",
    "window_depth",
]
