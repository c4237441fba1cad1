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
Application Settings Manager
----------------------------------------------------------------------------
FILE VERSION: v1.0-5-5.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 5 - Command Line
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- Load default.json, then {environment}.json
- Apply ${HALFPASS_*} environment overrides
- Validate each value against its schema; fall back to the default on failure
- Serve the logging, quadrature, solver, embedding, output and runtime sections

Per-run problem data does not live here; see run_config_manager.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

# Module version
__version__ = "v1.0-5-5.1-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Keys inside a section that describe it rather than configure it
_META_KEYS = ("defaults", "validation", "description")

_TYPE_MAP = {
    "string": str,
    "integer": int,
    "float": (int, float),
    "boolean": bool,
    "list": (list, tuple),
}


class ConfigManager:
    """
    Layered application settings.

    Attributes:
        config_dir: directory holding the JSON files
        environment: production, testing or development
    """

    ENVIRONMENTS = ["production", "testing", "development"]
    DEFAULT_CONFIG = "default.json"

    def __init__(
        self,
        config_dir: Optional[Union[str, Path]] = None,
        environment: str = "production",
    ):
        self.config_dir = (
            Path(config_dir) if config_dir is not None else Path(__file__).parent.parent / "config"
        )

        if environment not in self.ENVIRONMENTS:
            logger.warning(f"⚠️ Unknown environment '{environment}', falling back to 'production'")
            environment = "production"
        self.environment = environment

        self._raw_config: Dict[str, Any] = {}
        self._resolved_config: Dict[str, Any] = {}
        self._validation_errors: List[str] = []

        self._load_configuration()
        logger.debug(f"✅ ConfigManager {__version__} initialized (environment: {self.environment})")

    # ------------------------------------------------------------------ loading

    def _load_configuration(self) -> None:
        """default.json <- {environment}.json <- environment variables -> validate."""
        self._raw_config = self._load_json_file(self.config_dir / self.DEFAULT_CONFIG)
        if not self._raw_config:
            logger.error(f"❌ Failed to load {self.DEFAULT_CONFIG} from {self.config_dir}")
            self._raw_config = self._get_emergency_defaults()

        env_path = self.config_dir / f"{self.environment}.json"
        if env_path.exists():
            overrides = self._load_json_file(env_path)
            if overrides:
                self._merge_config(overrides)
                logger.debug(f"📝 Applied {self.environment} overrides")

        self._apply_env_overrides()
        self._resolve_configuration()

    def _load_json_file(self, path: Path) -> Dict[str, Any]:
        if not path.exists():
            logger.warning(f"⚠️ Config file not found: {path}")
            return {}
        try:
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"❌ Could not read {path}: {e}")
            return {}

    def _merge_config(self, override_config: Dict[str, Any]) -> None:
        for section, values in override_config.items():
            if section.startswith("_"):
                continue
            current = self._raw_config.get(section)
            if isinstance(current, dict) and isinstance(values, dict):
                for key, value in values.items():
                    if key not in _META_KEYS:
                        current[key] = value
                        logger.debug(f"  Override: {section}.{key} = {value}")
            elif current is None:
                self._raw_config[section] = values

    def _apply_env_overrides(self) -> None:
        """Replace ${HALFPASS_*} references with environment values, typed by the schema."""
        count = 0
        for section, section_config in self._raw_config.items():
            if section.startswith("_") or not isinstance(section_config, dict):
                continue
            for key, value in list(section_config.items()):
                if key in _META_KEYS:
                    continue
                if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
                    env_value = os.environ.get(value[2:-1])
                    if env_value is not None:
                        section_config[key] = self._convert_type(
                            env_value, self._get_expected_type(section, key)
                        )
                        count += 1
        if count:
            logger.debug(f"🔧 Applied {count} environment variable overrides")

    def _get_expected_type(self, section: str, key: str) -> str:
        validation = self._raw_config.get(section, {}).get("validation", {})
        return validation.get(key, {}).get("type", "string")

    def _convert_type(self, value: str, expected_type: str) -> Any:
        try:
            if expected_type == "integer":
                return int(value)
            if expected_type == "float":
                return float(value)
            if expected_type == "boolean":
                return value.lower() in ("true", "1", "yes", "on")
            if expected_type == "list":
                return json.loads(value)
            return value
        except (ValueError, json.JSONDecodeError) as e:
            logger.warning(f"⚠️ Type conversion failed for '{value}' -> {expected_type}: {e}")
            return value

    def _resolve_configuration(self) -> None:
        self._resolved_config = {}
        for section, section_config in self._raw_config.items():
            if section.startswith("_") or not isinstance(section_config, dict):
                continue
            defaults = section_config.get("defaults", {})
            validation = section_config.get("validation", {})
            resolved: Dict[str, Any] = {}
            for key, default_value in defaults.items():
                value = section_config.get(key)
                if value is None or (isinstance(value, str) and value.startswith("${")):
                    value = default_value
                schema = validation.get(key)
                if schema:
                    ok, value = self._validate_value(value, schema, default_value)
                    if not ok:
                        self._validation_errors.append(
                            f"{section}.{key}: invalid value '{section_config.get(key)}', "
                            f"using default '{default_value}'"
                        )
                resolved[key] = value
            self._resolved_config[section] = resolved

        if self._validation_errors:
            logger.warning(
                f"⚠️ {len(self._validation_errors)} validation issues resolved with defaults:"
            )
            for error in self._validation_errors:
                logger.warning(f"  - {error}")

    def _validate_value(self, value: Any, validation: Dict[str, Any], default: Any) -> Tuple[bool, Any]:
        expected_type = validation.get("type", "string")
        if not self._check_type(value, expected_type):
            return False, default
        if "range" in validation and expected_type in ("integer", "float"):
            low, high = validation["range"]
            if not (low <= value <= high):
                return False, default
        if "allowed_values" in validation and expected_type == "string":
            if value not in validation["allowed_values"]:
                return False, default
        return True, value

    def _check_type(self, value: Any, expected_type: str) -> bool:
        expected = _TYPE_MAP.get(expected_type)
        if expected is None:
            return True
        if isinstance(value, bool) and expected_type in ("integer", "float"):
            return False
        return isinstance(value, expected)

    def _get_emergency_defaults(self) -> Dict[str, Any]:
        """Minimal settings so a run can start without any JSON file."""
        logger.warning("🚨 Using emergency fallback configuration!")
        return {
            "logging": {
                "defaults": {"level": "INFO", "format": "human", "file": None, "console": True}
            },
            "quadrature": {"defaults": {"order": 64}},
            "solver": {
                "defaults": {
                    "tol_res": 1e-8,
                    "max_iterations": 100000,
                    "path_nodes": 40,
                    "armijo_step": 1.0,
                    "armijo_backtrack": 0.5,
                    "armijo_c": 1e-4,
                    "newton_switch": 1e-5,
                    "restarts": 4,
                }
            },
            "embedding": {"defaults": {"modes": 64, "restarts": 32, "ascent_steps": 200}},
            "output": {"defaults": {"directory": "./output", "grid_resolution": 201}},
            "runtime": {"defaults": {"threads": 4}},
        }

    # =========================================================================
    # PUBLIC API
    # =========================================================================

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self._resolved_config.get(section, {}).get(key, default)

    def get_section(self, section: str) -> Dict[str, Any]:
        return dict(self._resolved_config.get(section, {}))

    def get_threads(self) -> int:
        return int(self.get("runtime", "threads", 1))

    def get_environment(self) -> str:
        return self.environment

    def get_validation_errors(self) -> List[str]:
        return list(self._validation_errors)

    def is_testing(self) -> bool:
        return self.environment == "testing"

    def to_dict(self) -> Dict[str, Any]:
        return {section: dict(values) for section, values in self._resolved_config.items()}

    def __repr__(self) -> str:
        return f"ConfigManager(environment='{self.environment}', config_dir='{self.config_dir}')"


# =============================================================================
# FACTORY FUNCTION
# =============================================================================


def create_config_manager(
    config_dir: Optional[Union[str, Path]] = None,
    environment: Optional[str] = None,
) -> ConfigManager:
    """
    Factory function for ConfigManager.

    Args:
        config_dir: configuration directory (default: src/config)
        environment: default from HALFPASS_ENVIRONMENT, else 'production'
    """
    if environment is None:
        environment = os.environ.get("HALFPASS_ENVIRONMENT", "production")
    logger.debug(f"🏭 Creating ConfigManager (environment: {environment})")
    return ConfigManager(config_dir=config_dir, environment=environment)


__all__ = ["ConfigManager", "create_config_manager"]
