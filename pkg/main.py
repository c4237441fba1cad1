#!/usr/bin/env python3
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
Main Entry Point for Half-Pass
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.5-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

USAGE:
    # First eigenvalues of the configured domain
    python main.py eigen --config src/config/examples/square_eigen.cfg

    # Constants, thresholds and hypothesis verdicts
    python main.py constants --config src/config/examples/worked_disk.cfg

    # Competitor inequality chain
    python main.py verify --config src/config/examples/worked_disk.cfg

    # Critical points, reports and trace grids
    python main.py solve --config src/config/examples/worked_disk.cfg --out ./output --seed 7

EXIT CODES:
    0 success, 2 configuration error, 3 solver failure
    (NO_CONVERGENCE, BOUNDARY_MINIMUM, MP_COLLAPSE), 4 THEOREM_VIOLATION or
    CHAIN_VIOLATION, 1 anything else

ENVIRONMENT VARIABLES:
    HALFPASS_ENVIRONMENT   - Environment (production, testing, development)
    HALFPASS_LOG_LEVEL     - Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    HALFPASS_LOG_FORMAT    - Log format (human, json)
    HALFPASS_THREADS       - Worker threads for restarts
"""

import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.table import Table

from src import __version__ as package_version
from src.errors import HalfPassError, exit_code_for
from src.managers import (
    ConfigManager,
    LoggingConfigManager,
    PipelineCommand,
    PipelineResult,
    PipelineStatus,
    RunConfigManager,
    create_config_manager,
    create_logging_config_manager,
    create_pipeline_manager,
    create_report_manager,
    create_run_config_manager,
)

# Module version
__version__ = "v1.0-5-5.5-1"


# =============================================================================
# Application Class
# =============================================================================


class HalfPass:
    """
    Command-line application.

    Attributes:
        config: ConfigManager instance
        logging_mgr: LoggingConfigManager instance
        console: rich console for the summary table
    """

    def __init__(self, console: Optional[Console] = None):
        self.config: Optional[ConfigManager] = None
        self.logging_mgr: Optional[LoggingConfigManager] = None
        self.console = console or Console()
        self._logger = None

    def startup(self, log_level: Optional[str] = None) -> None:
        """Application settings first, then logging (which reads them)."""
        self.config = create_config_manager()
        self.logging_mgr = create_logging_config_manager(
            log_level=log_level, config_manager=self.config
        )
        self._logger = self.logging_mgr.get_logger("main")
        self._logger.debug(f"Half-Pass {package_version} ({self.config.get_environment()})")

    def run(
        self,
        command: str,
        config_path: str,
        out_dir: Optional[str] = None,
        seed: Optional[int] = None,
        log_level: Optional[str] = None,
    ) -> int:
        """
        Run one command and write its report.

        Returns:
            Exit code
        """
        self.startup(log_level)
        pipeline_command = PipelineCommand(command)
        run_config: Optional[RunConfigManager] = None

        try:
            run_config = create_run_config_manager(config_path)
            pipeline = create_pipeline_manager(
                run_config=run_config,
                config_manager=self.config,
                logging_manager=self.logging_mgr,
                seed=seed,
            )
            result = pipeline.run(pipeline_command)
        except HalfPassError as e:
            self._logger.error(f"❌ {e.code}: {e.message}")
            result = PipelineResult(
                command=pipeline_command,
                status=PipelineStatus.ERROR,
                exit_code=exit_code_for(e),
                error=e,
            )

        output_dir = out_dir
        grid_resolution = None
        if run_config is not None:
            output_dir = output_dir or run_config.config.output.directory
            grid_resolution = run_config.config.output.grid_resolution
        reporter = create_report_manager(
            output_dir=output_dir,
            grid_resolution=grid_resolution,
            config_manager=self.config,
            logging_manager=self.logging_mgr,
        )
        try:
            paths = reporter.write(result, run_config)
        except OSError as e:
            self._logger.error(f"❌ Could not write the report: {e}")
            return result.exit_code or 1

        self.print_summary(result, str(paths["report"]))
        return result.exit_code

    # =========================================================================
    # Console summary
    # =========================================================================

    def print_summary(self, result: PipelineResult, report_path: str) -> None:
        table = Table(title=f"Half-Pass {result.command.value}")
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", justify="right")

        status = "✅ success" if result.succeeded else f"❌ {result.error_code}"
        table.add_row("status", status)
        table.add_row("exit code", str(result.exit_code))

        for row in self._summary_rows(result):
            table.add_row(*row)
        table.add_row("report", report_path)
        self.console.print(table)

    @staticmethod
    def _summary_rows(result: PipelineResult) -> List[List[str]]:
        rows: List[List[str]] = []
        if result.eigenpairs:
            rows.append(["eigenpairs", str(len(result.eigenpairs))])
            rows.append(["lambda_1", f"{result.eigenpairs[0].eigenvalue:.12g}"])
        for name, estimate in result.embedding.items():
            rows.append([name, f"{estimate.estimate:.8g} ({'exact' if estimate.exact else 'lower'})"])
        b = result.bundle
        if b is not None:
            rows.append(["lambda", f"{b.lam:.10g}"])
            rows.append(["gamma", f"{b.gamma:.6g}"])
            rows.append(["rho", f"{b.rho:.6g}"])
            if b.lambda_star is not None:
                rows.append(["lambda*", f"{b.lambda_star:.10g}"])
            if b.mu1 is not None and b.mu2 is not None:
                rows.append(["(mu1, mu2)", f"({b.mu1:.6g}, {b.mu2:.6g})"])
            rows.append(["(AI) / (AII) / tiau2", f"{b.ai_flag} / {b.aii_flag} / {b.rho_gamma_flag}"])
        if result.chain is not None:
            rows.append(["chain", "passed" if result.chain.passed else "failed"])
        s = result.solve
        if s is not None:
            for point in s.points:
                rows.append(
                    [point.label, f"J={point.energy:.10g}  res={point.residual:.1e}  "
                     f"morse={point.morse_index}"]
                )
            rows.append(["distinct (nontrivial)", f"{s.distinct_count} ({s.nontrivial_distinct_count})"])
            rows.append(["guarantee path", str(s.guarantee_path)])
        return rows


# =============================================================================
# CLI Argument Parser
# =============================================================================


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Half-Pass: Spectral-Galerkin Multiplicity Toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py eigen --config src/config/examples/square_eigen.cfg
  python main.py constants --config src/config/examples/worked_disk.cfg
  python main.py verify --config src/config/examples/worked_disk.cfg
  python main.py solve --config src/config/examples/worked_disk.cfg --out ./output --seed 7
        """,
    )
    parser.add_argument(
        "command",
        choices=[c.value for c in PipelineCommand],
        help="Pipeline to run",
    )
    parser.add_argument(
        "--config",
        required=True,
        metavar="PATH",
        help="Run configuration file",
    )
    parser.add_argument(
        "--out",
        metavar="DIR",
        help="Output directory (default: output.directory)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        metavar="U64",
        help="Seed overriding solver.seed",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Log level (default: HALFPASS_LOG_LEVEL or the logging settings)",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"Half-Pass {package_version}",
    )

    args = parser.parse_args(argv)
    if args.seed is not None and not 0 <= args.seed < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    return args


# =============================================================================
# Entry Point
# =============================================================================


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Exit code
    """
    load_dotenv()
    args = parse_args(argv)
    app = HalfPass()

    try:
        return app.run(
            command=args.command,
            config_path=args.config,
            out_dir=args.out,
            seed=args.seed,
            log_level=args.log_level,
        )
    except KeyboardInterrupt:
        print("\n👋 Interrupted by user", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
