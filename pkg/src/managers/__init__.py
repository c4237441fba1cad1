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
Managers Package for Half-Pass
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.0-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

MANAGERS:
- ConfigManager:        Layered JSON application settings
- LoggingConfigManager: Colorized/JSON logging with SUCCESS level
- RunConfigManager:     Line-oriented run configurations (pydantic schema)
- PipelineManager:      eigen / constants / verify / solve orchestration
- ReportManager:        report.txt and CSV artifacts

USAGE:
    from src.managers import (
        create_config_manager,
        create_logging_config_manager,
        create_run_config_manager,
        create_pipeline_manager,
        create_report_manager,
    )

    config = create_config_manager()
    logging_mgr = create_logging_config_manager(config_manager=config)
    run_config = create_run_config_manager("src/config/examples/worked_disk.cfg")
    pipeline = create_pipeline_manager(run_config, config, logging_mgr)
    result = pipeline.run("solve")
    create_report_manager(config_manager=config).write(result, run_config)
"""

# Module version
__version__ = "v1.0-5-5.0-1"

# =============================================================================
# Configuration Manager
# =============================================================================

from .config_manager import (
    ConfigManager,
    create_config_manager,
)

# =============================================================================
# Logging Configuration Manager
# =============================================================================

from .logging_config_manager import (
    LoggingConfigManager,
    create_logging_config_manager,
    SUCCESS_LEVEL,
    Colors,
    Symbols,
)

# =============================================================================
# Run Configuration Manager
# =============================================================================

from .run_config_manager import (
    RunConfig,
    RunConfigManager,
    create_run_config_manager,
    parse_run_config,
    parse_sections,
    parse_value,
    format_value,
)

# =============================================================================
# Pipeline Manager
# =============================================================================

from .pipeline_manager import (
    PipelineCommand,
    PipelineManager,
    PipelineResult,
    PipelineStatus,
    create_pipeline_manager,
)

# =============================================================================
# Report Manager
# =============================================================================

from .report_manager import (
    ReportManager,
    create_report_manager,
    REPORT_FILE,
    EIGEN_FILE,
)

# =============================================================================
# Export public interface
# =============================================================================

__all__ = [
    # Config
    "ConfigManager",
    "create_config_manager",
    # Logging
    "LoggingConfigManager",
    "create_logging_config_manager",
    "SUCCESS_LEVEL",
    "Colors",
    "Symbols",
    # Run config
    "RunConfig",
    "RunConfigManager",
    "create_run_config_manager",
    "parse_run_config",
    "parse_sections",
    "parse_value",
    "format_value",
    # Pipeline
    "PipelineCommand",
    "PipelineManager",
    "PipelineResult",
    "PipelineStatus",
    "create_pipeline_manager",
    # Reports
    "ReportManager",
    "create_report_manager",
    "REPORT_FILE",
    "EIGEN_FILE",
]
