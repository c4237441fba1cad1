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
Pipeline Manager
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.3-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Run one command (eigen, constants, verify, solve) for a RunConfig
- Resolve the `auto` parameters (tau, x0, rho, gamma, lambda)
- Estimate the trace-embedding constants c_1, c_q, c_2
- Wire the validators and the critical-point solver together
- Capture any HalfPassError in the result with its exit code

EXECUTION FLOW:
    eigen     → eigenpair table
    constants → embedding constants → ConstantsBundle → certificate checks
    verify    → constants + competitor chain
    solve     → constants (or exploratory bundle) → three-stage solve

AUTO RESOLUTION:
    rho auto               → rho_bar (maximizer of F(rho)/rho²)
    lambda auto, gamma auto → lambda = 2 lambda*, gamma recommended there
    lambda auto, gamma set  → midpoint of (mu1, mu2) if valid, else 2 lambda*
    lambda set, gamma auto  → gamma recommended at lambda

USAGE:
    from src.managers.pipeline_manager import create_pipeline_manager

    pipeline = create_pipeline_manager(
        run_config=run_config,
        config_manager=config,
        logging_manager=logging_mgr,
    )
    result = pipeline.run("solve")
    sys.exit(result.exit_code)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from src.errors import ConfigError, HalfPassError, exit_code_for
from src.managers.run_config_manager import RunConfigManager
from src.spectral.function_space import EmbeddingConstants, estimate_embedding_constant
from src.spectral.spectral_basis import DomainSpec, EigenPair, eigenpairs
from src.validators.certificate_validator import (
    CertificateValidationResult,
    create_certificate_validator,
)
from src.validators.competitor_validator import ChainReport, create_competitor_validator
from src.variational.constants import (
    ConstantsBundle,
    build_constants_bundle,
    exploratory_bundle,
)
from src.variational.energy import BetaField, Nonlinearity, create_problem_instance
from src.variational.solvers import SolveReport, SolverSettings, create_critical_point_solver

# Module version
__version__ = "v1.0-5-5.3-1"

# Initialize logger
logger = logging.getLogger(__name__)

DEFAULT_QUADRATURE_ORDER = 64
DEFAULT_EMBEDDING = {"modes": 64, "restarts": 32, "ascent_steps": 200}


# =============================================================================
# Enums and Data Classes
# =============================================================================


class PipelineCommand(str, Enum):
    """Commands exposed by the CLI."""

    EIGEN = "eigen"
    CONSTANTS = "constants"
    VERIFY = "verify"
    SOLVE = "solve"


class PipelineStatus(str, Enum):
    """Outcome of a pipeline run."""

    SUCCESS = "success"
    ERROR = "error"


@dataclass
class PipelineResult:
    """
    Everything one command produced.

    Attributes:
        command: the command that ran
        status: success or error
        exit_code: CLI exit status (0 on success)
        resolved: the parameters actually used after `auto` resolution
        eigenpairs: eigen table (eigen command)
        embedding: c_1, c_q, c_2 estimates keyed by name
        bundle: constants bundle
        certificates: certificate and hypothesis checks
        chain: competitor chain report (verify)
        solve: critical points (solve)
        error: the captured error, if any
    """

    command: PipelineCommand
    status: PipelineStatus = PipelineStatus.SUCCESS
    exit_code: int = 0
    resolved: Dict[str, Any] = field(default_factory=dict)
    eigenpairs: Tuple[EigenPair, ...] = ()
    embedding: Dict[str, EmbeddingConstants] = field(default_factory=dict)
    bundle: Optional[ConstantsBundle] = None
    certificates: Optional[CertificateValidationResult] = None
    chain: Optional[ChainReport] = None
    solve: Optional[SolveReport] = None
    error: Optional[BaseException] = None

    @property
    def succeeded(self) -> bool:
        return self.status is PipelineStatus.SUCCESS

    @property
    def error_code(self) -> Optional[str]:
        if self.error is None:
            return None
        return getattr(self.error, "code", "UNEXPECTED")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command.value,
            "status": self.status.value,
            "exit_code": self.exit_code,
            "resolved": dict(self.resolved),
            "eigenpairs": len(self.eigenpairs),
            "embedding": {k: v.to_dict() for k, v in self.embedding.items()},
            "bundle": self.bundle.to_dict() if self.bundle else None,
            "certificates": self.certificates.to_dict() if self.certificates else None,
            "chain": self.chain.to_dict() if self.chain else None,
            "solve": self.solve.to_dict() if self.solve else None,
            "error": self.error_code,
        }


# =============================================================================
# Pipeline Manager
# =============================================================================


class PipelineManager:
    """
    Orchestrates one run of a command.

    Attributes:
        run_config: parsed run configuration and its builders
        seed: seed for every randomized stage
        modes: Galerkin dimension N
        order: quadrature order
    """

    def __init__(
        self,
        run_config: RunConfigManager,
        config_manager: Optional[Any] = None,
        logging_manager: Optional[Any] = None,
        seed: Optional[int] = None,
    ):
        self.run_config = run_config
        self.config_manager = config_manager
        self.logging_manager = logging_manager

        if logging_manager:
            self._logger = logging_manager.get_logger("pipeline")
        else:
            self._logger = logger

        cfg = run_config.config
        self.seed = int(seed) if seed is not None else cfg.solver.seed
        self.modes = cfg.solver.modes
        self.order = cfg.solver.quadrature_order or self._app_setting(
            "quadrature", "order", DEFAULT_QUADRATURE_ORDER
        )
        self.threads = config_manager.get_threads() if config_manager else 1

        self.domain: DomainSpec = run_config.build_domain()
        self.beta: BetaField = run_config.build_beta()
        self.nonlinearity: Nonlinearity = run_config.build_nonlinearity()

        self._logger.debug(
            f"PipelineManager {__version__} initialized "
            f"({self.domain.describe()}, N={self.modes}, order={self.order}, seed={self.seed})"
        )

    def _app_setting(self, section: str, key: str, default: Any) -> Any:
        if self.config_manager is None:
            return default
        value = self.config_manager.get(section, key)
        return default if value is None else value

    def _success(self, message: str) -> None:
        getattr(self._logger, "success", self._logger.info)(message)

    # =========================================================================
    # Entry point
    # =========================================================================

    def run(self, command: Union[str, PipelineCommand]) -> PipelineResult:
        """Run a command; errors are captured, never raised."""
        command = PipelineCommand(command)
        result = PipelineResult(command=command)
        handlers = {
            PipelineCommand.EIGEN: self._run_eigen,
            PipelineCommand.CONSTANTS: self._run_constants,
            PipelineCommand.VERIFY: self._run_verify,
            PipelineCommand.SOLVE: self._run_solve,
        }
        self._logger.info(f"🚀 Running '{command.value}' on {self.domain.describe()}")
        try:
            handlers[command](result)
        except HalfPassError as e:
            self._fail(result, e)
            self._logger.error(f"❌ {e.code}: {e.message}")
        except Exception as e:
            self._fail(result, e)
            self._logger.exception(f"❌ Unexpected error during '{command.value}': {e}")
        else:
            self._success(f"✅ '{command.value}' finished")
        return result

    @staticmethod
    def _fail(result: PipelineResult, error: BaseException) -> None:
        result.status = PipelineStatus.ERROR
        result.error = error
        result.exit_code = exit_code_for(error)

    # =========================================================================
    # Commands
    # =========================================================================

    def _run_eigen(self, result: PipelineResult) -> None:
        result.eigenpairs = eigenpairs(self.domain, self.modes)
        result.resolved["modes"] = self.modes

    def _run_constants(self, result: PipelineResult) -> None:
        bundle = self.resolve_bundle(result)
        instance = create_problem_instance(
            self.domain, self.beta, self.nonlinearity, bundle.lam, self.modes, self.order,
            logging_manager=self.logging_manager,
        )
        validator = create_certificate_validator(
            seed=self.seed, logger_instance=self._child_logger("certificates")
        )
        result.certificates = validator.validate(self.nonlinearity, bundle, instance)

    def _run_verify(self, result: PipelineResult) -> None:
        self._run_constants(result)
        bundle = result.bundle
        validator = create_competitor_validator(
            order=self.order, seed=self.seed, logger_instance=self._child_logger("competitor")
        )
        result.chain = validator.verify(
            bundle, self.nonlinearity, bundle.lam, self.domain, beta=self.beta
        )

    def _run_solve(self, result: PipelineResult) -> None:
        if self.nonlinearity.growth is None:
            bundle = self._exploratory_bundle(result)
        else:
            bundle = self.resolve_bundle(result)
        instance = create_problem_instance(
            self.domain, self.beta, self.nonlinearity, bundle.lam, self.modes, self.order,
            logging_manager=self.logging_manager,
        )
        s = self.run_config.config.solver
        settings = SolverSettings.from_config(
            self.config_manager,
            tol_res=s.tol_res,
            max_iterations=s.max_iterations,
            path_nodes=s.path_nodes,
            restarts=s.restarts,
            seed=self.seed,
            threads=self.threads,
        )
        solver = create_critical_point_solver(instance, settings, self.logging_manager)
        result.solve = solver.solve_three(bundle, refine=s.refine)

    # =========================================================================
    # Constants and auto resolution
    # =========================================================================

    def _child_logger(self, name: str) -> Optional[logging.Logger]:
        return self.logging_manager.get_logger(name) if self.logging_manager else None

    def estimate_constants(self) -> Dict[str, EmbeddingConstants]:
        """c_1, c_q and c_2 on the configured embedding subspace."""
        growth = self.nonlinearity.growth
        if growth is None:
            raise ConfigError(
                "Embedding constants need the growth certificate (nonlinearity.q)",
                key="nonlinearity.q",
            )
        section = self.run_config.config.embedding
        options = {
            key: getattr(section, key) or self._app_setting("embedding", key, default)
            for key, default in DEFAULT_EMBEDDING.items()
        }
        estimates: Dict[str, EmbeddingConstants] = {}
        warm = None
        for name, p in (("c2", 2.0), ("c1", 1.0), ("cq", growth.q)):
            estimate = estimate_embedding_constant(
                self.domain,
                p,
                modes=options["modes"],
                restarts=options["restarts"],
                ascent_steps=options["ascent_steps"],
                seed=self.seed,
                order=self.order,
                warm_start=warm,
                threads=self.threads,
                logging_manager=self.logging_manager,
            )
            estimates[name] = estimate
            warm = estimate.maximizer
            self._logger.debug(f"🔍 {name} (p={p:g}) >= {estimate.estimate:.12g}")
        return estimates

    def _ball(self) -> Tuple[Optional[Any], Optional[float]]:
        v = self.run_config.config.variational
        x0 = RunConfigManager.auto(v.x0)
        tau = RunConfigManager.auto(v.tau)
        return x0, tau

    def resolve_bundle(self, result: PipelineResult) -> ConstantsBundle:
        """
        Build the ConstantsBundle with every `auto` parameter resolved.

        Raises:
            ConfigError: no growth certificate
            PreconditionError: B(x0, tau) not inside Omega
        """
        v = self.run_config.config.variational
        gamma = RunConfigManager.auto(v.gamma)
        rho = RunConfigManager.auto(v.rho)
        lam = RunConfigManager.auto(v.lam)
        x0, tau = self._ball()

        estimates = self.estimate_constants()
        result.embedding = estimates
        common = dict(
            domain=self.domain,
            beta0=self.beta.beta0,
            beta_sup=self.beta.sup,
            nonlinearity=self.nonlinearity,
            c1=estimates["c1"].estimate,
            cq=estimates["cq"].estimate,
            c2=estimates["c2"].estimate,
            rho=rho,
            tau=tau,
            x0=x0,
        )

        lam_note = "given"
        if lam is None:
            trial = build_constants_bundle(gamma=gamma, lam=None, **common)
            if gamma is not None and trial.interval_valid:
                lam = 0.5 * (trial.mu1 + trial.mu2)
                lam_note = "auto: midpoint of (mu1, mu2)"
            else:
                lam = 2.0 * trial.lambda_star
                lam_note = "auto: 2 lambda*"
        bundle = build_constants_bundle(gamma=gamma, lam=float(lam), **common)
        bundle.notes["lambda"] = lam_note

        result.bundle = bundle
        result.resolved.update(self._resolved(bundle))
        self._logger.info(
            f"📐 lambda={bundle.lam:.12g} ({lam_note}), gamma={bundle.gamma:.6g}, "
            f"rho={bundle.rho:.6g}, mu1={bundle.mu1:.6g}, mu2={bundle.mu2:.6g}"
        )
        if not (bundle.ai_flag and bundle.rho_gamma_flag and bundle.interval_valid):
            self._logger.warning("⚠️ Not every hypothesis holds for the resolved parameters")
        return bundle

    def _exploratory_bundle(self, result: PipelineResult) -> ConstantsBundle:
        v = self.run_config.config.variational
        gamma = RunConfigManager.auto(v.gamma)
        lam = RunConfigManager.auto(v.lam)
        if lam is None:
            raise ConfigError(
                "Without a growth certificate lambda cannot be 'auto'", key="variational.lambda"
            )
        if gamma is None:
            raise ConfigError(
                "Without a growth certificate gamma cannot be 'auto'", key="variational.gamma"
            )
        x0, tau = self._ball()
        bundle = exploratory_bundle(
            self.domain,
            gamma,
            self.beta.beta0,
            self.beta.sup,
            rho=RunConfigManager.auto(v.rho),
            lam=float(lam),
            tau=tau,
            x0=x0,
        )
        result.bundle = bundle
        result.resolved.update(self._resolved(bundle))
        self._logger.warning("⚠️ Exploratory run: no theorem hypotheses are checked")
        return bundle

    @staticmethod
    def _resolved(bundle: ConstantsBundle) -> Dict[str, Any]:
        return {
            "lambda": bundle.lam,
            "gamma": bundle.gamma,
            "rho": bundle.rho,
            "tau": bundle.tau,
            "x0": list(bundle.x0),
        }

    def get_status(self) -> Dict[str, Any]:
        return {
            "version": __version__,
            "domain": self.domain.describe(),
            "modes": self.modes,
            "order": self.order,
            "seed": self.seed,
            "threads": self.threads,
            "nonlinearity": self.nonlinearity.kind.value,
            "certified_growth": self.nonlinearity.growth is not None,
        }


# =============================================================================
# Factory Function
# =============================================================================


def create_pipeline_manager(
    run_config: RunConfigManager,
    config_manager: Optional[Any] = None,
    logging_manager: Optional[Any] = None,
    seed: Optional[int] = None,
) -> PipelineManager:
    """
    Factory function for PipelineManager.

    Args:
        run_config: RunConfigManager for the problem
        config_manager: application settings (solver, quadrature, embedding, runtime)
        logging_manager: LoggingConfigManager for named loggers
        seed: overrides solver.seed of the run config

    Raises:
        ConfigError: the run config cannot be turned into a problem
    """
    logger.debug("🏭 Creating PipelineManager")
    return PipelineManager(
        run_config=run_config,
        config_manager=config_manager,
        logging_manager=logging_manager,
        seed=seed,
    )


__all__ = [
    "PipelineCommand",
    "PipelineStatus",
    "PipelineResult",
    "PipelineManager",
    "create_pipeline_manager",
]
