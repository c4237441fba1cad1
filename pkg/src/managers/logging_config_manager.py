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
Logging Configuration Manager
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.2-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Colorized human console output or JSON lines; plain text for log files
- Custom SUCCESS level (25) with logger.success()
- One handler set shared by the component loggers ('halfpass.*') and the
  module loggers ('src.*')
- Pin numpy/scipy/matplotlib/asyncio loggers to WARNING

LEVEL SYMBOLS:
    CRITICAL 🚨  ERROR ❌  WARNING ⚠️  INFO ℹ️  DEBUG 🔍  SUCCESS ✅

ENVIRONMENT VARIABLES:
- HALFPASS_LOG_LEVEL:   DEBUG, INFO, WARNING, ERROR, CRITICAL
- HALFPASS_LOG_FORMAT:  human, json
- HALFPASS_LOG_FILE:    log file path (empty = none)
- HALFPASS_LOG_CONSOLE: true/false
"""

import json
import logging
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

# Module version
__version__ = "v1.0-5-5.2-1"

# =============================================================================
# Constants
# =============================================================================

SUCCESS_LEVEL = 25

DEFAULT_APP_NAME = "halfpass"

# Module loggers are named after the package
MODULE_ROOT = "src"

NOISY_LIBRARIES = [
    "numpy",
    "scipy",
    "matplotlib",
    "asyncio",
]


class Colors:
    """ANSI color codes for terminal output."""

    CRITICAL = "\033[1;91m"
    ERROR = "\033[91m"
    WARNING = "\033[93m"
    INFO = "\033[96m"
    DEBUG = "\033[90m"
    SUCCESS = "\033[92m"

    RESET = "\033[0m"
    DIM = "\033[2m"


class Symbols:
    """Emoji symbols for log levels."""

    CRITICAL = "🚨"
    ERROR = "❌"
    WARNING = "⚠️"
    INFO = "ℹ️"
    DEBUG = "🔍"
    SUCCESS = "✅"


# =============================================================================
# Formatters
# =============================================================================


def _line_parts(record: logging.LogRecord) -> Tuple[str, str, str]:
    timestamp = datetime.fromtimestamp(record.created).strftime("%Y-%m-%d %H:%M:%S")
    return timestamp, record.levelname.ljust(8), record.name[:28].ljust(28)


class ColorizedFormatter(logging.Formatter):
    """
    [2026-10-19 14:30:00] SUCCESS  | halfpass.solvers             | ✅ w2: J=...

    Messages that already start with an emoji keep it; others get the level symbol.
    """

    LEVEL_COLORS = {
        logging.CRITICAL: Colors.CRITICAL,
        logging.ERROR: Colors.ERROR,
        logging.WARNING: Colors.WARNING,
        logging.INFO: Colors.INFO,
        logging.DEBUG: Colors.DEBUG,
        SUCCESS_LEVEL: Colors.SUCCESS,
    }

    LEVEL_SYMBOLS = {
        logging.CRITICAL: Symbols.CRITICAL,
        logging.ERROR: Symbols.ERROR,
        logging.WARNING: Symbols.WARNING,
        logging.INFO: Symbols.INFO,
        logging.DEBUG: Symbols.DEBUG,
        SUCCESS_LEVEL: Symbols.SUCCESS,
    }

    def __init__(self, colorize: bool = True):
        super().__init__()
        self.colorize = colorize

    def format(self, record: logging.LogRecord) -> str:
        color = self.LEVEL_COLORS.get(record.levelno, Colors.INFO) if self.colorize else ""
        reset = Colors.RESET if self.colorize else ""
        dim = Colors.DIM if self.colorize else ""
        timestamp, level_name, logger_name = _line_parts(record)

        message = record.getMessage()
        if message[:1].isascii():
            message = f"{self.LEVEL_SYMBOLS.get(record.levelno, Symbols.INFO)} {message}"

        formatted = f"{dim}[{timestamp}]{reset} {color}{level_name}{reset} | {logger_name} | {message}"
        if record.exc_info:
            formatted += f"\n{self.formatException(record.exc_info)}"
        return formatted


class JSONFormatter(logging.Formatter):
    """One JSON object per line."""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        if hasattr(record, "extra_fields"):
            payload.update(record.extra_fields)
        return json.dumps(payload, ensure_ascii=False)


class PlainFormatter(logging.Formatter):
    """Uncolored text for files."""

    def format(self, record: logging.LogRecord) -> str:
        timestamp, level_name, logger_name = _line_parts(record)
        formatted = f"[{timestamp}] {level_name} | {logger_name} | {record.getMessage()}"
        if record.exc_info:
            formatted += f"\n{self.formatException(record.exc_info)}"
        return formatted


# =============================================================================
# Logging Configuration Manager
# =============================================================================


class LoggingConfigManager:
    """
    Attributes:
        app_name: prefix of component loggers
        log_level: current level name
        log_format: human or json
        console_enabled: whether a console handler is attached
        file_path: optional log file
    """

    def __init__(
        self,
        log_level: str = "INFO",
        log_format: str = "human",
        log_file: Optional[str] = None,
        console_enabled: bool = True,
        app_name: str = DEFAULT_APP_NAME,
    ):
        self.app_name = app_name
        self.log_level = log_level.upper()
        self.log_format = log_format.lower()
        self.console_enabled = console_enabled
        self.file_path = log_file or None

        self._configured_loggers: Dict[str, logging.Logger] = {}

        self._register_success_level()
        self._configure_roots()
        self._silence_noisy_libraries()

    @property
    def roots(self) -> List[str]:
        return [self.app_name, MODULE_ROOT]

    def _register_success_level(self) -> None:
        if logging.getLevelName(SUCCESS_LEVEL) != "SUCCESS":
            logging.addLevelName(SUCCESS_LEVEL, "SUCCESS")

    def _configure_roots(self) -> None:
        level = getattr(logging, self.log_level, logging.INFO)
        handlers: List[logging.Handler] = []
        if self.console_enabled:
            handlers.append(self._create_console_handler())
        if self.file_path:
            file_handler = self._create_file_handler()
            if file_handler:
                handlers.append(file_handler)

        for name in self.roots:
            root = logging.getLogger(name)
            root.setLevel(level)
            root.handlers.clear()
            for handler in handlers:
                root.addHandler(handler)
            root.propagate = False

    def _create_console_handler(self) -> logging.Handler:
        # stderr keeps stdout free for the summary table
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(getattr(logging, self.log_level, logging.INFO))
        if self.log_format == "json":
            handler.setFormatter(JSONFormatter())
        else:
            is_tty = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()
            force_color = os.environ.get("FORCE_COLOR", "").lower() in ("1", "true", "yes")
            handler.setFormatter(ColorizedFormatter(colorize=is_tty or force_color))
        return handler

    def _create_file_handler(self) -> Optional[logging.Handler]:
        try:
            path = Path(self.file_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            handler = logging.FileHandler(path, encoding="utf-8")
        except OSError as e:
            print(f"⚠️ Failed to create log file handler: {e}", file=sys.stderr)
            return None
        handler.setLevel(getattr(logging, self.log_level, logging.INFO))
        handler.setFormatter(PlainFormatter())
        return handler

    def _silence_noisy_libraries(self) -> None:
        for library in NOISY_LIBRARIES:
            logging.getLogger(library).setLevel(logging.WARNING)

    def get_logger(self, name: str) -> logging.Logger:
        """'halfpass.<name>' with a success() method attached."""
        full_name = f"{self.app_name}.{name}"
        if full_name in self._configured_loggers:
            return self._configured_loggers[full_name]

        component = logging.getLogger(full_name)

        def success(msg: str, *args, **kwargs):
            component.log(SUCCESS_LEVEL, msg, *args, **kwargs)

        component.success = success
        self._configured_loggers[full_name] = component
        return component

    def set_level(self, level: str) -> None:
        self.log_level = level.upper()
        numeric = getattr(logging, self.log_level, logging.INFO)
        for name in self.roots:
            root = logging.getLogger(name)
            root.setLevel(numeric)
            for handler in root.handlers:
                handler.setLevel(numeric)

    def get_status(self) -> Dict[str, Any]:
        return {
            "app_name": self.app_name,
            "log_level": self.log_level,
            "log_format": self.log_format,
            "console_enabled": self.console_enabled,
            "file_path": self.file_path,
            "configured_loggers": list(self._configured_loggers.keys()),
        }


# =============================================================================
# Factory Function
# =============================================================================


def create_logging_config_manager(
    log_level: Optional[str] = None,
    log_format: Optional[str] = None,
    log_file: Optional[str] = None,
    console_enabled: Optional[bool] = None,
    app_name: str = DEFAULT_APP_NAME,
    config_manager: Optional[Any] = None,
) -> LoggingConfigManager:
    """
    Factory function for LoggingConfigManager.

    Each setting resolves: explicit argument -> ConfigManager -> HALFPASS_LOG_* -> default.
    """

    def resolve(value: Any, key: str, env: str, default: Any) -> Any:
        if value is None and config_manager is not None:
            value = config_manager.get("logging", key)
        if value is None:
            value = os.environ.get(env, default)
        return value

    log_level = resolve(log_level, "level", "HALFPASS_LOG_LEVEL", "INFO")
    log_format = resolve(log_format, "format", "HALFPASS_LOG_FORMAT", "human")
    log_file = resolve(log_file, "file", "HALFPASS_LOG_FILE", None)
    console = resolve(console_enabled, "console", "HALFPASS_LOG_CONSOLE", "true")
    if isinstance(console, str):
        console = console.lower() in ("true", "1", "yes")

    return LoggingConfigManager(
        log_level=log_level,
        log_format=log_format,
        log_file=log_file,
        console_enabled=bool(console),
        app_name=app_name,
    )


__all__ = [
    "LoggingConfigManager",
    "create_logging_config_manager",
    "SUCCESS_LEVEL",
    "Colors",
    "Symbols",
]
