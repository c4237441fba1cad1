"""
Layered JSON settings: defaults, environment files, HALFPASS_* overrides.
"""

import json

import pytest

from src.managers import create_config_manager


@pytest.fixture
def clean_env(monkeypatch):
    for name in (
        "HALFPASS_ENVIRONMENT",
        "HALFPASS_QUADRATURE_ORDER",
        "HALFPASS_SOLVER_TOL_RES",
        "HALFPASS_THREADS",
        "HALFPASS_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestLayering:
    def test_production_defaults(self, clean_env):
        cm = create_config_manager(environment="production")
        assert cm.get("quadrature", "order") == 64
        assert cm.get("solver", "tol_res") == 1e-8
        assert cm.get_threads() == 4
        assert cm.get_validation_errors() == []

    def test_testing_overrides(self, clean_env):
        cm = create_config_manager(environment="testing")
        assert cm.is_testing()
        assert cm.get("logging", "level") == "DEBUG"
        assert cm.get("quadrature", "order") == 48
        assert cm.get_section("embedding") == {"modes": 16, "restarts": 4, "ascent_steps": 50}
        assert cm.get("output", "grid_resolution") == 21
        assert cm.get_threads() == 1

    def test_environment_variable_selects_file(self, clean_env):
        clean_env.setenv("HALFPASS_ENVIRONMENT", "testing")
        assert create_config_manager().get_environment() == "testing"

    def test_unknown_environment_falls_back(self, clean_env):
        assert create_config_manager(environment="staging").get_environment() == "production"

    def test_missing_key_default(self, clean_env):
        cm = create_config_manager(environment="production")
        assert cm.get("solver", "nonexistent", default=3) == 3
        assert cm.get_section("nonexistent") == {}


class TestEnvironmentOverrides:
    def test_typed_override(self, clean_env):
        clean_env.setenv("HALFPASS_SOLVER_TOL_RES", "1e-6")
        clean_env.setenv("HALFPASS_THREADS", "2")
        cm = create_config_manager(environment="production")
        assert cm.get("solver", "tol_res") == 1e-6
        assert cm.get_threads() == 2

    def test_out_of_range_falls_back_to_default(self, clean_env):
        clean_env.setenv("HALFPASS_QUADRATURE_ORDER", "1")
        cm = create_config_manager(environment="production")
        assert cm.get("quadrature", "order") == 64
        assert any("quadrature.order" in e for e in cm.get_validation_errors())


class TestFallbacks:
    def test_emergency_defaults_without_files(self, clean_env, tmp_path):
        cm = create_config_manager(config_dir=tmp_path, environment="production")
        assert cm.get("quadrature", "order") == 64
        assert cm.get("embedding", "restarts") == 32

    def test_custom_directory(self, clean_env, tmp_path):
        (tmp_path / "default.json").write_text(
            json.dumps({"quadrature": {"order": 12, "defaults": {"order": 64}}})
        )
        cm = create_config_manager(config_dir=tmp_path, environment="production")
        assert cm.get("quadrature", "order") == 12
        assert cm.to_dict() == {"quadrature": {"order": 12}}
