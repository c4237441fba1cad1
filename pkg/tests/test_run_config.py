"""
Run configuration grammar, schema and builders.
"""

import math

import pytest

from src.errors import ConfigError
from src.managers.run_config_manager import (
    RunConfigManager,
    create_run_config_manager,
    format_value,
    parse_run_config,
    parse_sections,
    parse_value,
)
from src.variational import NonlinearityKind
from tests.conftest import WORKED_DISK_CFG

BOX_CFG = """
[domain]
kind = rectangle
sizes = 1, 1, 1

[beta]
grid = {grid}

[nonlinearity]
kind = power
coefficient = 1
exponent = 2
"""

MINIMAL = """
[domain]
kind = rectangle
sizes = pi, pi

[nonlinearity]
kind = power
coefficient = 1
exponent = 3
"""


class TestValueGrammar:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("1/12", 1.0 / 12.0),
            ("pi", math.pi),
            ("2*pi", 2.0 * math.pi),
            ("pi/2", math.pi / 2.0),
            ("-pi", -math.pi),
            ("1e-3", 1e-3),
            ("  7 ", 7.0),
        ],
    )
    def test_numbers(self, raw, expected):
        assert parse_value(raw) == pytest.approx(expected)

    def test_lists_booleans_and_auto(self):
        assert parse_value("0, pi/2") == pytest.approx([0.0, math.pi / 2.0])
        assert parse_value("TRUE") is True
        assert parse_value("false") is False
        assert parse_value("Auto") == "auto"
        assert parse_value("disk") == "disk"

    def test_format_inverts_parse(self):
        for value in (True, 0.1, [1.0, 2.5], "disk"):
            assert parse_value(format_value(value)) == value


class TestSections:
    def test_comments_and_blank_lines(self):
        sections = parse_sections("# header\n[a]\nx = 1  # trailing\n\n[b]\ny = two\n")
        assert sections == {"a": {"x": 1.0}, "b": {"y": "two"}}

    def test_duplicate_key(self):
        with pytest.raises(ConfigError) as info:
            parse_sections("[a]\nx = 1\nx = 2\n")
        assert info.value.key == "a.x"

    def test_duplicate_section(self):
        with pytest.raises(ConfigError):
            parse_sections("[a]\n[a]\n")

    def test_line_without_equals(self):
        with pytest.raises(ConfigError):
            parse_sections("[a]\njust words\n")

    def test_key_outside_section(self):
        with pytest.raises(ConfigError):
            parse_sections("x = 1\n")

    def test_prefix_filters_sections(self):
        text = "[run]\nexit_code = 0\n[config.domain]\nkind = disk\n"
        assert parse_sections(text, prefix="config.") == {"domain": {"kind": "disk"}}


class TestSchema:
    def test_minimal_defaults(self):
        config = parse_run_config(MINIMAL)
        assert config.domain.sizes == pytest.approx([math.pi, math.pi])
        assert config.beta.constant == 1.0
        assert config.variational.lam == "auto"
        assert config.solver.modes == 64

    def test_lambda_alias(self):
        config = parse_run_config(MINIMAL + "[variational]\nlambda = 12.5\n")
        assert config.variational.lam == 12.5

    def test_missing_kind(self):
        with pytest.raises(ConfigError) as info:
            parse_run_config("[domain]\nradius = 1\n[nonlinearity]\nkind = power\n"
                             "coefficient = 1\nexponent = 3\n")
        assert info.value.key == "domain.kind"
        assert "Missing required key 'domain.kind'" in str(info.value)

    def test_unknown_key(self):
        with pytest.raises(ConfigError) as info:
            parse_run_config(MINIMAL + "[solver]\nmodez = 4\n")
        assert info.value.key == "solver.modez"

    def test_incomplete_growth_certificate(self):
        with pytest.raises(ConfigError):
            parse_run_config(MINIMAL.replace("exponent = 3", "exponent = 3\na1 = 0"))

    def test_echo_reparses(self):
        config = parse_run_config(WORKED_DISK_CFG)
        echoed = "\n".join(config.echo_lines())
        assert "lambda = 100.0" in echoed
        assert parse_run_config(echoed, prefix="config.") == config


class TestBuilders:
    def test_worked_disk(self):
        manager = RunConfigManager(parse_run_config(WORKED_DISK_CFG))
        domain = manager.build_domain()
        assert domain.dimension == 2
        assert manager.build_beta().beta0 == 1.0
        nl = manager.build_nonlinearity()
        assert nl.kind is NonlinearityKind.TRUNCATED
        assert nl.growth.q == 3.0
        assert nl.subquadratic.b == pytest.approx(1.0 / 12.0)
        assert nl.sign

    def test_auto(self):
        assert RunConfigManager.auto("auto") is None
        assert RunConfigManager.auto(2.0) == 2.0

    def test_missing_table_file(self, tmp_path):
        path = tmp_path / "tab.cfg"
        path.write_text(MINIMAL.replace(
            "kind = power\ncoefficient = 1\nexponent = 3", "kind = tabulated\ntable = missing.csv"
        ))
        with pytest.raises(ConfigError) as info:
            create_run_config_manager(path)
        assert info.value.key == "nonlinearity.table"

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ConfigError):
            create_run_config_manager(tmp_path / "absent.cfg")

    def test_from_file(self, worked_cfg_file):
        manager = create_run_config_manager(worked_cfg_file)
        assert manager.base_dir == worked_cfg_file.parent
        assert manager.echo().startswith("[config.domain]")

    def test_beta_grid_on_a_box(self, tmp_path):
        rows = ["x1,x2,x3,beta"]
        for x3 in (1.0, 0.0):
            for x1 in (0.0, 1.0):
                for x2 in (1.0, 0.0):
                    rows.append(f"{x1},{x2},{x3},{1.0 + x1 + 2.0 * x2 + 4.0 * x3}")
        (tmp_path / "beta.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")
        path = tmp_path / "box.cfg"
        path.write_text(BOX_CFG.format(grid="beta.csv"), encoding="utf-8")
        beta = create_run_config_manager(path).build_beta()
        assert beta.beta0 == 1.0
        assert beta.sup == 8.0
        assert beta.values([[0.5, 0.25, 0.75]])[0] == pytest.approx(5.0)

    def test_beta_grid_needs_a_column_per_dimension(self, tmp_path):
        rows = ["x1,x2,beta", "0,0,1", "0,1,1", "1,0,1", "1,1,1"]
        (tmp_path / "flat.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")
        path = tmp_path / "box.cfg"
        path.write_text(BOX_CFG.format(grid="flat.csv"), encoding="utf-8")
        with pytest.raises(ConfigError) as info:
            create_run_config_manager(path).build_beta()
        assert info.value.key == "beta.grid"
