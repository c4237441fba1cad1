"""
Pipeline commands and the files the report manager writes.
"""

import math

import numpy as np
import pytest

from src.managers import (
    PipelineCommand,
    PipelineStatus,
    create_pipeline_manager,
    create_report_manager,
    create_run_config_manager,
)
from src.managers.run_config_manager import parse_run_config, parse_sections
from src.spectral import SpectralBasis, SpectralField
from tests.conftest import J01

NO_GROWTH_CFG = """
[domain]
kind = rectangle
sizes = pi, pi

[nonlinearity]
kind = polynomial
coefficients = 0, 1, 0, -1

[variational]
gamma = 1

[solver]
modes = 4
"""


@pytest.fixture
def worked_run(worked_cfg_file):
    return create_run_config_manager(worked_cfg_file)


@pytest.fixture
def pipeline(worked_run, testing_config):
    return create_pipeline_manager(worked_run, config_manager=testing_config)


@pytest.fixture
def reporter(tmp_path, testing_config):
    return create_report_manager(output_dir=tmp_path / "out", config_manager=testing_config)


class TestPipeline:
    def test_settings_come_from_the_run_config(self, pipeline):
        status = pipeline.get_status()
        assert status["modes"] == 12
        assert status["order"] == 32
        assert status["seed"] == 3
        assert status["certified_growth"]

    def test_seed_override(self, worked_run):
        assert create_pipeline_manager(worked_run, seed=9).seed == 9

    def test_eigen(self, pipeline):
        result = pipeline.run("eigen")
        assert result.status is PipelineStatus.SUCCESS
        assert result.exit_code == 0
        assert len(result.eigenpairs) == 12
        assert result.eigenpairs[0].eigenvalue == pytest.approx(J01**2, rel=1e-12)

    def test_constants(self, pipeline):
        result = pipeline.run(PipelineCommand.CONSTANTS)
        assert result.succeeded
        assert set(result.embedding) == {"c2", "c1", "cq"}
        assert result.embedding["c2"].estimate == pytest.approx(1.0 / math.sqrt(J01), rel=1e-8)
        assert result.bundle.notes["lambda"] == "given"
        assert result.resolved["lambda"] == 100.0
        assert result.bundle.lambda_star == pytest.approx(58.5, rel=1e-8)
        assert result.certificates.checks["AI"] is True

    def test_verify(self, pipeline):
        result = pipeline.run("verify")
        assert result.exit_code == 0, result.error
        assert result.chain.passed
        assert result.to_dict()["chain"]["passed"] is True

    def test_exploratory_solve_needs_lambda(self, tmp_path):
        path = tmp_path / "no_growth.cfg"
        path.write_text(NO_GROWTH_CFG, encoding="utf-8")
        result = create_pipeline_manager(create_run_config_manager(path)).run("solve")
        assert result.status is PipelineStatus.ERROR
        assert result.error_code == "CONFIG"
        assert result.exit_code == 2

    def test_constants_need_growth(self, tmp_path):
        path = tmp_path / "no_growth.cfg"
        path.write_text(NO_GROWTH_CFG, encoding="utf-8")
        result = create_pipeline_manager(create_run_config_manager(path)).run("constants")
        assert result.exit_code == 2
        assert result.error.key == "nonlinearity.q"


class TestReport:
    def test_eigen_files(self, pipeline, worked_run, reporter):
        paths = reporter.write(pipeline.run("eigen"), worked_run)
        lines = paths["eigen"].read_text(encoding="utf-8").splitlines()
        assert lines[0] == "j,lambda,sqrt_lambda,descriptor"
        assert len(lines) == 13
        assert float(lines[1].split(",")[1]) == pytest.approx(J01**2, rel=1e-15)

        text = paths["report"].read_text(encoding="utf-8")
        assert text.startswith("# halfpass eigen report")
        sections = parse_sections(text)
        assert sections["run"]["exit_code"] == 0.0
        assert sections["eigen"]["count"] == 12.0

    def test_report_echoes_the_run_config(self, pipeline, worked_run, reporter):
        paths = reporter.write(pipeline.run("eigen"), worked_run)
        text = paths["report"].read_text(encoding="utf-8")
        assert parse_run_config(text, prefix="config.") == worked_run.config

    def test_error_section(self, tmp_path, reporter):
        path = tmp_path / "no_growth.cfg"
        path.write_text(NO_GROWTH_CFG, encoding="utf-8")
        run = create_run_config_manager(path)
        paths = reporter.write(create_pipeline_manager(run).run("constants"), run)
        sections = parse_sections(paths["report"].read_text(encoding="utf-8"))
        assert sections["run"]["status"] == "error"
        assert sections["error"]["code"] == "CONFIG"
        assert sections["error"]["details.key"] == "nonlinearity.q"

    def test_report_without_run_config(self, pipeline, reporter):
        paths = reporter.write(pipeline.run("eigen"))
        assert "[config.domain]" not in paths["report"].read_text(encoding="utf-8")

    def test_trace_grid_layout(self, unit_disk, reporter):
        reporter.grid_resolution = 11
        u = SpectralField.mode(SpectralBasis(unit_disk, 1), 1)
        rows = reporter.trace_grid(u, unit_disk)
        assert rows.shape == (121, 4)
        # x1 runs fastest
        assert rows[0, :2].tolist() == [-1.0, -1.0]
        assert rows[1, :2].tolist() == pytest.approx([-0.8, -1.0])
        assert rows[0, 3] == 0.0 and rows[0, 2] == 0.0
        centre = rows[60]
        assert centre[3] == 1.0
        assert centre[2] == pytest.approx(float(u.values(np.array([[0.0, 0.0]]))[0]))

    def test_coefficient_file(self, square, reporter):
        reporter._ensure_directory()
        u = SpectralField(SpectralBasis(square, 3), [0.5, 0.0, -1.25])
        lines = reporter.write_coefficients(u, 2).read_text(encoding="utf-8").splitlines()
        assert lines == ["j,a_j", "1,0.5", "2,0", "3,-1.25"]

    def test_trace_file(self, square, reporter):
        reporter._ensure_directory()
        reporter.grid_resolution = 5
        u = SpectralField.mode(SpectralBasis(square, 1), 1)
        path = reporter.write_trace_grid(u, square, 1)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "x1,x2,u,in_domain"
        assert len(lines) == 26
