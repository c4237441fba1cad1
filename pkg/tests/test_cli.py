"""
End-to-end runs through main.main().
"""

import pytest

import main
from src.managers.run_config_manager import parse_sections

pytestmark = pytest.mark.integration


@pytest.fixture(autouse=True)
def testing_environment(monkeypatch):
    monkeypatch.setenv("HALFPASS_ENVIRONMENT", "testing")


def read_report(directory):
    return parse_sections((directory / "report.txt").read_text(encoding="utf-8"))


def test_eigen_command(worked_cfg_file, tmp_path, capsys):
    out = tmp_path / "eigen"
    assert main.main(["eigen", "--config", str(worked_cfg_file), "--out", str(out)]) == 0
    assert (out / "eigen.csv").is_file()
    assert read_report(out)["run"]["command"] == "eigen"
    assert "exit code" in capsys.readouterr().out


def test_missing_domain_kind_exits_with_config_status(tmp_path):
    cfg = tmp_path / "broken.cfg"
    cfg.write_text("[domain]\nradius = 1\n[nonlinearity]\nkind = power\ncoefficient = 1\n"
                   "exponent = 3\n", encoding="utf-8")
    out = tmp_path / "broken"
    assert main.main(["constants", "--config", str(cfg), "--out", str(out)]) == 2
    error = read_report(out)["error"]
    assert error["code"] == "CONFIG"
    assert error["details.key"] == "domain.kind"


def test_unreadable_config(tmp_path):
    out = tmp_path / "absent"
    assert main.main(["eigen", "--config", str(tmp_path / "nope.cfg"), "--out", str(out)]) == 2
    assert (out / "report.txt").is_file()


def test_verify_command_with_seed(worked_cfg_file, tmp_path):
    out = tmp_path / "verify"
    code = main.main(
        ["verify", "--config", str(worked_cfg_file), "--out", str(out), "--seed", "11"]
    )
    assert code == 0
    sections = read_report(out)
    assert sections["chain"]["passed"] is True
    assert sections["run"]["resolved.lambda"] == 100.0


def test_unknown_command_is_rejected(worked_cfg_file):
    with pytest.raises(SystemExit) as info:
        main.main(["optimize", "--config", str(worked_cfg_file)])
    assert info.value.code == 2


@pytest.mark.slow
def test_solve_writes_solution_files(worked_cfg_file, tmp_path):
    out = tmp_path / "solve"
    assert main.main(["solve", "--config", str(worked_cfg_file), "--out", str(out)]) == 0
    sections = read_report(out)
    assert sections["solutions.w1"]["coefficients"] == "solution_1_coefficients.csv"
    assert (out / "solution_2_trace.csv").is_file()
    trace = (out / "solution_2_trace.csv").read_text(encoding="utf-8").splitlines()
    assert len(trace) == 1 + 11 * 11


@pytest.mark.slow
def test_solve_is_reproducible_for_a_seed(worked_cfg_file, tmp_path):
    runs = [tmp_path / "first", tmp_path / "second"]
    for out in runs:
        args = ["solve", "--config", str(worked_cfg_file), "--out", str(out), "--seed", "5"]
        assert main.main(args) == 0
    first, second = runs
    for name in ("report.txt", "solution_1_coefficients.csv", "solution_2_trace.csv"):
        assert (first / name).read_bytes() == (second / name).read_bytes()
