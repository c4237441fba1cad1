"""
Logging configuration: roots, success level, formatters.
"""

import json
import logging

import pytest

from src.managers.logging_config_manager import (
    SUCCESS_LEVEL,
    ColorizedFormatter,
    JSONFormatter,
    PlainFormatter,
    create_logging_config_manager,
)


def make_record(message: str, level: int = logging.INFO) -> logging.LogRecord:
    return logging.LogRecord("halfpass.test", level, __file__, 1, message, None, None)


@pytest.fixture
def manager(tmp_path):
    mgr = create_logging_config_manager(
        log_level="DEBUG", log_format="human", log_file=str(tmp_path / "logs" / "run.log"),
        console_enabled=False,
    )
    yield mgr
    for name in mgr.roots:
        for handler in logging.getLogger(name).handlers:
            handler.close()
        logging.getLogger(name).handlers.clear()


class TestLoggingConfigManager:
    def test_both_roots_are_configured(self, manager):
        assert manager.roots == ["halfpass", "src"]
        for name in manager.roots:
            root = logging.getLogger(name)
            assert root.level == logging.DEBUG
            assert not root.propagate
            assert len(root.handlers) == 1

    def test_component_logger_has_success(self, manager, tmp_path):
        log = manager.get_logger("solvers")
        assert log.name == "halfpass.solvers"
        assert manager.get_logger("solvers") is log
        log.success("w2 converged")
        for handler in logging.getLogger("halfpass").handlers:
            handler.flush()
        text = (tmp_path / "logs" / "run.log").read_text(encoding="utf-8")
        assert "SUCCESS" in text
        assert "w2 converged" in text

    def test_set_level(self, manager):
        manager.set_level("warning")
        assert logging.getLogger("src").level == logging.WARNING
        assert manager.get_status()["log_level"] == "WARNING"

    def test_config_manager_supplies_defaults(self, testing_config):
        mgr = create_logging_config_manager(config_manager=testing_config, console_enabled=False)
        assert mgr.log_level == "DEBUG"
        assert mgr.file_path is None

    def test_status(self, manager):
        manager.get_logger("pipeline")
        status = manager.get_status()
        assert status["app_name"] == "halfpass"
        assert status["configured_loggers"] == ["halfpass.pipeline"]


class TestFormatters:
    def test_success_level_name(self, manager):
        assert logging.getLevelName(SUCCESS_LEVEL) == "SUCCESS"

    def test_colorized_adds_symbol_to_plain_messages(self):
        line = ColorizedFormatter(colorize=False).format(make_record("plain message"))
        assert "| halfpass.test" in line
        assert line.endswith("plain message")
        assert "\x1b[" not in line

    def test_colorized_keeps_leading_emoji(self):
        line = ColorizedFormatter(colorize=False).format(make_record("✅ done"))
        assert line.endswith("| ✅ done")

    def test_json_formatter(self):
        payload = json.loads(JSONFormatter().format(make_record("hello", logging.WARNING)))
        assert payload["level"] == "WARNING"
        assert payload["logger"] == "halfpass.test"
        assert payload["message"] == "hello"

    def test_plain_formatter(self):
        line = PlainFormatter().format(make_record("x = 1"))
        assert line.endswith("| x = 1")
        assert "INFO" in line
