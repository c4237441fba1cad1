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
Report Manager
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.4-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Write report.txt in the run-config grammar (flat `key = value` sections)
- Write eigen.csv, solution_<i>_coefficients.csv and solution_<i>_trace.csv
- Echo the resolved run config under [config.<section>]
- Manage the output directory

REPORT FORMATS:
- report.txt: [run], [error], [eigen], [embedding], [constants],
  [certificates], [chain], [chain.<clause>], [solve], [solutions.<label>],
  [refinement.<label>], [config.<section>]
- eigen.csv:                      j,lambda,sqrt_lambda,descriptor
- solution_<i>_coefficients.csv:  j,a_j
- solution_<i>_trace.csv:         x1,x2,u,in_domain (x2 outer, x1 inner)

Nothing time-dependent is written, so re-running a command with the same
seed overwrites every file with identical bytes.

USAGE:
    from src.managers.report_manager import create_report_manager

    reporter = create_report_manager(output_dir="./output", config_manager=config)
    paths = reporter.write(result, run_config)
"""

import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from src.managers.pipeline_manager import PipelineResult
from src.managers.run_config_manager import RunConfigManager, format_value
from src.spectral.function_space import SpectralField
from src.spectral.spectral_basis import DomainSpec, EigenPair

# Module version
__version__ = "v1.0-5-5.4-1"

# Initialize logger
logger = logging.getLogger(__name__)

DEFAULT_OUTPUT_DIR = "./output"
DEFAULT_GRID_RESOLUTION = 201

REPORT_FILE = "report.txt"
EIGEN_FILE = "eigen.csv"

# 17 significant digits round-trip every double
NUMBER_FORMAT = "%.17g"

Section = Tuple[str, List[Tuple[str, Any]]]


# =============================================================================
# Formatting helpers
# =============================================================================


def _format(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, Enum):
        value = value.value
    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, str):
        # '#' starts a comment in the config grammar
        return value.replace("#", "no.").replace("\n", " ")
    return format_value(value)


def _flatten(values: Dict[str, Any], prefix: str = "") -> List[Tuple[str, Any]]:
    items: List[Tuple[str, Any]] = []
    for key, value in values.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            items.extend(_flatten(value, f"{name}."))
        elif isinstance(value, (list, tuple)) and any(isinstance(v, dict) for v in value):
            continue
        else:
            items.append((name, value))
    return items


def _number(value: float) -> str:
    return NUMBER_FORMAT % value


# =============================================================================
# Report Manager
# =============================================================================


class ReportManager:
    """
    Writes every artifact of a pipeline run.

    Attributes:
        output_dir: directory receiving the files
        grid_resolution: points per axis of the trace grids
    """

    def __init__(
        self,
        output_dir: Union[str, Path] = DEFAULT_OUTPUT_DIR,
        grid_resolution: int = DEFAULT_GRID_RESOLUTION,
        logging_manager: Optional[Any] = None,
    ):
        self.output_dir = Path(output_dir)
        self.grid_resolution = int(grid_resolution)

        if logging_manager:
            self._logger = logging_manager.get_logger("report")
        else:
            self._logger = logger

        self._logger.debug(
            f"ReportManager {__version__} initialized (dir: {self.output_dir}, "
            f"grid: {self.grid_resolution})"
        )

    def _ensure_directory(self) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)

    # =========================================================================
    # Entry point
    # =========================================================================

    def write(
        self, result: PipelineResult, run_config: Optional[RunConfigManager] = None
    ) -> Dict[str, Path]:
        """
        Write report.txt plus the CSV files the command produced.

        Returns:
            {"report": path, "eigen": path, "w1_coefficients": path, ...}
        """
        self._ensure_directory()
        paths: Dict[str, Path] = {}
        solution_files: Dict[str, Tuple[str, str]] = {}

        if result.eigenpairs and result.command.value == "eigen":
            paths["eigen"] = self.write_eigen_table(result.eigenpairs)

        if result.solve is not None and run_config is not None:
            domain = run_config.build_domain()
            for i, point in enumerate(result.solve.points, start=1):
                coeff_path = self.write_coefficients(point.field, i)
                trace_path = self.write_trace_grid(point.field, domain, i)
                paths[f"{point.label}_coefficients"] = coeff_path
                paths[f"{point.label}_trace"] = trace_path
                solution_files[point.label] = (coeff_path.name, trace_path.name)

        report_path = self.output_dir / REPORT_FILE
        text = self.render_report(result, run_config, solution_files)
        report_path.write_text(text, encoding="utf-8")
        paths["report"] = report_path

        self._logger.info(f"📄 Wrote {len(paths)} files to {self.output_dir}")
        return paths

    # =========================================================================
    # report.txt
    # =========================================================================

    def render_report(
        self,
        result: PipelineResult,
        run_config: Optional[RunConfigManager] = None,
        solution_files: Optional[Dict[str, Tuple[str, str]]] = None,
    ) -> str:
        sections: List[Section] = [self._run_section(result, run_config)]
        if result.error is not None:
            sections.append(self._error_section(result))
        if result.eigenpairs and result.command.value == "eigen":
            sections.append(self._eigen_section(result.eigenpairs))
        if result.embedding:
            sections.append(
                ("embedding", _flatten({k: v.to_dict() for k, v in result.embedding.items()}))
            )
        if result.bundle is not None:
            sections.append(("constants", _flatten(result.bundle.to_dict())))
        if result.certificates is not None:
            sections.append(self._certificate_section(result))
        if result.chain is not None:
            sections.extend(self._chain_sections(result))
        if result.solve is not None:
            sections.extend(self._solve_sections(result, solution_files or {}))

        lines = [f"# halfpass {result.command.value} report"]
        for name, items in sections:
            lines.append("")
            lines.append(f"[{name}]")
            lines.extend(f"{key} = {_format(value)}" for key, value in items)
        if run_config is not None:
            lines.append("")
            lines.extend(run_config.config.echo_lines())
        return "\n".join(lines) + "\n"

    def _run_section(
        self, result: PipelineResult, run_config: Optional[RunConfigManager]
    ) -> Section:
        items: List[Tuple[str, Any]] = [
            ("command", result.command.value),
            ("status", result.status.value),
            ("exit_code", result.exit_code),
            ("version", __version__),
        ]
        if run_config is not None:
            items.append(("domain", run_config.config.domain.kind))
        items.extend((f"resolved.{k}", v) for k, v in result.resolved.items())
        return "run", items

    @staticmethod
    def _error_section(result: PipelineResult) -> Section:
        error = result.error
        items: List[Tuple[str, Any]] = [
            ("code", result.error_code),
            ("message", getattr(error, "message", str(error))),
        ]
        details = getattr(error, "details", None) or {}
        items.extend(_flatten(details, "details."))
        return "error", items

    @staticmethod
    def _eigen_section(pairs: Iterable[EigenPair]) -> Section:
        pairs = list(pairs)
        items: List[Tuple[str, Any]] = [("count", len(pairs)), ("file", EIGEN_FILE)]
        if pairs:
            items.append(("lambda_1", pairs[0].eigenvalue))
            items.append(("lambda_max", pairs[-1].eigenvalue))
        return "eigen", items

    @staticmethod
    def _certificate_section(result: PipelineResult) -> Section:
        c = result.certificates
        items: List[Tuple[str, Any]] = [
            ("is_valid", c.is_valid),
            ("error_count", c.error_count),
            ("warning_count", c.warning_count),
        ]
        items.extend((f"check.{k}", v) for k, v in c.checks.items())
        items.extend((f"error_{i}", e) for i, e in enumerate(c.errors, start=1))
        items.extend((f"warning_{i}", w) for i, w in enumerate(c.warnings, start=1))
        return "certificates", items

    @staticmethod
    def _chain_sections(result: PipelineResult) -> List[Section]:
        chain = result.chain
        head = {k: v for k, v in chain.to_dict().items() if k != "clauses"}
        sections: List[Section] = [("chain", _flatten(head))]
        for clause in chain.clauses:
            values = clause.to_dict()
            values.pop("name", None)
            sections.append((f"chain.{clause.name}", _flatten(values)))
        return sections

    @staticmethod
    def _solve_sections(
        result: PipelineResult, solution_files: Dict[str, Tuple[str, str]]
    ) -> List[Section]:
        report = result.solve
        summary = {
            k: v
            for k, v in report.to_dict().items()
            if k not in ("points", "distances", "messages", "diagnostics")
        }
        items = _flatten(summary)
        items.extend((f"distance.{k}", v) for k, v in report.distances.items())
        items.extend((f"message_{i}", m) for i, m in enumerate(report.messages, start=1))
        diagnostics = {k: v for k, v in report.diagnostics.items() if k != "galerkin_refinement"}
        items.extend(_flatten(diagnostics, "diagnostics."))
        sections: List[Section] = [("solve", items)]

        for point in report.points:
            values = point.to_dict()
            values.pop("label", None)
            point_items = _flatten(values)
            files = solution_files.get(point.label)
            if files:
                point_items.append(("coefficients", files[0]))
                point_items.append(("trace", files[1]))
            sections.append((f"solutions.{point.label}", point_items))

        refinement = report.diagnostics.get("galerkin_refinement")
        if refinement:
            modes = refinement.get("modes", [])
            sections.append(("refinement", [("modes", list(modes))]))
            for label, values in refinement.items():
                if label != "modes":
                    sections.append((f"refinement.{label}", _flatten(values)))
        return sections

    # =========================================================================
    # CSV files
    # =========================================================================

    def write_eigen_table(self, pairs: Iterable[EigenPair]) -> Path:
        lines = ["j,lambda,sqrt_lambda,descriptor"]
        for pair in pairs:
            lines.append(
                f"{pair.index},{_number(pair.eigenvalue)},{_number(pair.sqrt_eigenvalue)},"
                f"{pair.label()}"
            )
        path = self.output_dir / EIGEN_FILE
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def write_coefficients(self, u: SpectralField, index: int) -> Path:
        lines = ["j,a_j"]
        lines.extend(f"{j},{_number(a)}" for j, a in enumerate(u.coefficients, start=1))
        path = self.output_dir / f"solution_{index}_coefficients.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def trace_grid(self, u: SpectralField, domain: DomainSpec) -> np.ndarray:
        """
        Rows (x1, x2, u, in_domain) on a uniform grid over the bounding box.

        Points outside the domain carry u = 0; in three dimensions the grid
        is the x3 = L3/2 slice.
        """
        lower, upper = domain.bounding_box
        axis1 = np.linspace(lower[0], upper[0], self.grid_resolution)
        axis2 = np.linspace(lower[1], upper[1], self.grid_resolution)
        x2, x1 = np.meshgrid(axis2, axis1, indexing="ij")
        planar = np.column_stack([x1.ravel(), x2.ravel()])
        if domain.dimension == 3:
            slice_height = np.full((planar.shape[0], 1), 0.5 * upper[2])
            points = np.hstack([planar, slice_height])
        else:
            points = planar

        inside = domain.contains(points)
        values = np.zeros(points.shape[0])
        if np.any(inside):
            values[inside] = u.values(points[inside])
        return np.column_stack([planar, values, inside.astype(float)])

    def write_trace_grid(self, u: SpectralField, domain: DomainSpec, index: int) -> Path:
        rows = self.trace_grid(u, domain)
        path = self.output_dir / f"solution_{index}_trace.csv"
        np.savetxt(
            path,
            rows,
            fmt=[NUMBER_FORMAT, NUMBER_FORMAT, NUMBER_FORMAT, "%d"],
            delimiter=",",
            header="x1,x2,u,in_domain",
            comments="",
        )
        return path

    def get_status(self) -> Dict[str, Any]:
        return {
            "version": __version__,
            "output_dir": str(self.output_dir),
            "grid_resolution": self.grid_resolution,
        }


# =============================================================================
# Factory Function
# =============================================================================


def create_report_manager(
    output_dir: Optional[Union[str, Path]] = None,
    grid_resolution: Optional[int] = None,
    config_manager: Optional[Any] = None,
    logging_manager: Optional[Any] = None,
) -> ReportManager:
    """
    Factory function for ReportManager.

    Each setting resolves: explicit argument -> ConfigManager 'output' section -> default.
    """
    if output_dir is None and config_manager is not None:
        output_dir = config_manager.get("output", "directory")
    if grid_resolution is None and config_manager is not None:
        grid_resolution = config_manager.get("output", "grid_resolution")

    logger.debug(f"🏭 Creating ReportManager (dir: {output_dir or DEFAULT_OUTPUT_DIR})")
    return ReportManager(
        output_dir=output_dir or DEFAULT_OUTPUT_DIR,
        grid_resolution=grid_resolution or DEFAULT_GRID_RESOLUTION,
        logging_manager=logging_manager,
    )


__all__ = [
    "ReportManager",
    "create_report_manager",
    "REPORT_FILE",
    "EIGEN_FILE",
]
