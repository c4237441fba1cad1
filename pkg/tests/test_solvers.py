"""
Critical-point solver: ball minimum, global minimum, mountain pass.
"""

import math

import numpy as np
import pytest

from src.errors import NoConvergenceError, PreconditionError
from src.spectral import DomainSpec, SpectralField
from src.variational import (
    BetaField,
    GrowthCertificate,
    Nonlinearity,
    SolverSettings,
    SubquadraticCertificate,
    build_constants_bundle,
    create_critical_point_solver,
    create_problem_instance,
    exploratory_bundle,
)
from tests.conftest import J01


@pytest.fixture
def double_well(square):
    # J(c) = (sqrt2/2 - 5/2) c^2 + (5/4) (9 / 4 pi^2) c^4 on one mode
    nl = Nonlinearity.polynomial([0.0, 1.0, 0.0, -1.0])
    return create_problem_instance(square, BetaField.uniform(), nl, 5.0, 1, order=32)


@pytest.fixture
def double_well_solver(double_well):
    return create_critical_point_solver(double_well, SolverSettings(seed=1))


@pytest.fixture
def worked_bundle(unit_disk, worked_nonlinearity):
    return build_constants_bundle(
        unit_disk, 1.0, 1.0, worked_nonlinearity, c1=0.9, cq=0.8,
        c2=1.0 / math.sqrt(J01), lam=100.0, tau=1.0, x0=(0.0, 0.0),
    )


class TestSettings:
    def test_defaults(self):
        s = SolverSettings()
        assert s.tol_res == 1e-8
        assert s.path_nodes == 40
        assert s.to_dict()["threads"] == 1

    def test_from_config_with_overrides(self, testing_config):
        s = SolverSettings.from_config(testing_config, seed=7, restarts=None)
        assert s.tol_res == pytest.approx(1e-8)
        assert s.threads == 1
        assert s.seed == 7
        assert s.restarts == 4


class TestDoubleWell:
    def test_symmetric_minima(self, double_well, double_well_solver):
        basis = double_well.basis
        plus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, 1.0))
        minus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, -1.0))
        a = 0.5 * math.sqrt(2.0) - 2.5
        b = 1.25 * 9.0 / (4.0 * math.pi**2)
        expected = -(a**2) / (4.0 * b)
        assert plus.energy == pytest.approx(expected, rel=1e-6)
        assert minus.energy == pytest.approx(plus.energy, rel=1e-10)
        assert plus.field.coefficients[0] == pytest.approx(-minus.field.coefficients[0], rel=1e-6)
        assert plus.morse_index == 0
        assert plus.residual < 1e-8

    def test_mountain_pass_climbs_to_the_origin(self, double_well, double_well_solver):
        basis = double_well.basis
        plus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, 1.0))
        minus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, -1.0))
        saddle = double_well_solver.mountain_pass(plus, minus)
        assert saddle.label == "w3"
        assert saddle.energy == pytest.approx(0.0, abs=1e-12)
        assert saddle.energy >= max(plus.energy, minus.energy) - 1e-9
        assert saddle.norm == pytest.approx(0.0, abs=1e-6)
        assert saddle.morse_index == 1

    def test_mountain_pass_needs_distinct_endpoints(self, double_well, double_well_solver):
        w = double_well_solver.minimize_in_ball(
            5.0, init=SpectralField.mode(double_well.basis, 1, 1.0)
        )
        with pytest.raises(PreconditionError):
            double_well_solver.mountain_pass(w, w)

    def test_mountain_pass_needs_minima_as_endpoints(self, double_well, double_well_solver):
        basis = double_well.basis
        plus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, 1.0))
        minus = double_well_solver.minimize_in_ball(5.0, init=SpectralField.mode(basis, 1, -1.0))
        saddle = double_well_solver.mountain_pass(plus, minus)
        with pytest.raises(PreconditionError) as info:
            double_well_solver.mountain_pass(plus, saddle)
        assert info.value.details["morse_index"] == 1

    def test_gamma_must_be_positive(self, double_well_solver):
        with pytest.raises(PreconditionError):
            double_well_solver.minimize_in_ball(0.0)


class TestStalledDescent:
    @pytest.fixture
    def three_mode_well(self, square):
        nl = Nonlinearity.polynomial([0.0, 1.0, 0.0, -1.0])
        return create_problem_instance(square, BetaField.uniform(), nl, 5.0, 3, order=32)

    def test_global_minimum_is_below_the_residual_tolerance(self, three_mode_well):
        settings = SolverSettings(tol_res=1e-16, max_iterations=5000, restarts=2)
        w2 = create_critical_point_solver(three_mode_well, settings).global_minimize(1.0)
        assert w2.residual < settings.tol_res

    def test_every_start_stalling_is_no_convergence(self, three_mode_well):
        settings = SolverSettings(tol_res=0.0, max_iterations=5000, restarts=1)
        with pytest.raises(NoConvergenceError):
            create_critical_point_solver(three_mode_well, settings).global_minimize(1.0)

    def test_interior_stall_in_the_ball_is_not_a_boundary_minimum(self, three_mode_well):
        solver = create_critical_point_solver(
            three_mode_well, SolverSettings(tol_res=0.0, max_iterations=5000)
        )
        init = SpectralField.mode(three_mode_well.basis, 1, 1.0)
        with pytest.raises(NoConvergenceError) as info:
            solver.minimize_in_ball(5.0, init=init)
        assert info.value.code == "NO_CONVERGENCE"
        assert info.value.details["residual"] >= 0.0


class TestTrivialCases:
    def test_zero_lambda_gives_one_trivial_solution(self, worked_instance, worked_bundle):
        solver = create_critical_point_solver(
            worked_instance.with_lambda(0.0), SolverSettings(restarts=1, seed=3)
        )
        report = solver.solve_three(worked_bundle)
        assert not report.guarantee_path
        assert report.distinct_count == 1
        assert report.nontrivial_distinct_count == 0
        assert all(p.trivial for p in report.points)
        assert "multiplicity not exhibited" in report.messages

    def test_zero_nonlinearity_gives_one_trivial_solution(self, unit_disk):
        instance = create_problem_instance(
            unit_disk, BetaField.uniform(), Nonlinearity.zero(), 100.0, modes=8, order=32
        )
        bundle = exploratory_bundle(unit_disk, 1.0, 1.0, 1.0, lam=100.0)
        report = create_critical_point_solver(instance, SolverSettings(restarts=1)).solve_three(bundle)
        assert [p.label for p in report.points] == ["w1", "w2"]
        assert all(p.energy == 0.0 and p.trivial for p in report.points)
        assert report.distinct_count == 1
        assert "multiplicity not exhibited" in report.messages


@pytest.mark.slow
class TestWorkedDisk:
    @pytest.fixture
    def report(self, worked_instance, worked_bundle):
        solver = create_critical_point_solver(
            worked_instance, SolverSettings(restarts=1, seed=3)
        )
        return solver.solve_three(worked_bundle)

    def test_multiplicity(self, report):
        assert report.guarantee_path
        assert report.multiplicity_exhibited
        assert [p.label for p in report.points][:2] == ["w1", "w2"]
        for point in report.points:
            assert point.residual < 1e-8

    def test_small_minimum_and_large_minimum(self, report):
        w1, w2 = report.point("w1"), report.point("w2")
        assert w1.phi < report.gamma**2
        assert w2.phi > report.gamma**2
        assert not w2.trivial
        assert w2.energy < w1.energy

    def test_global_minimum_is_locally_minimal(self, report, worked_instance, rng):
        c = report.point("w2").field.x_coordinates()
        base = worked_instance.energy_x(c)
        for _ in range(50):
            v = rng.standard_normal(c.size)
            v *= 1e-3 / np.linalg.norm(v)
            assert worked_instance.energy_x(c + v) >= base - 1e-10

    def test_report_serializes(self, report):
        values = report.to_dict()
        assert values["lambda"] == 100.0
        assert values["distinct_count"] == report.distinct_count
        assert len(values["points"]) == len(report.points)

    def test_galerkin_refinement(self, worked_instance, worked_bundle):
        solver = create_critical_point_solver(
            worked_instance, SolverSettings(restarts=1, seed=3)
        )
        report = solver.solve_three(worked_bundle, refine=True)
        refinement = report.diagnostics["galerkin_refinement"]
        assert refinement["modes"] == [12, 24]
        assert set(refinement["w2"]) == {"coarse", "fine", "relative_change"}


@pytest.fixture(scope="module")
def fine_report():
    disk = DomainSpec.disk(1.0)
    nl = Nonlinearity.truncated(
        Nonlinearity.bump(2.0, 1.0), 1.0, growth=GrowthCertificate(0.0, 1.0, 3.0),
        sign=True, subquadratic=SubquadraticCertificate(1.0 / 12.0, 1.0),
    )
    bundle = build_constants_bundle(
        disk, 1.0, 1.0, nl, c1=0.9, cq=0.8, c2=1.0 / math.sqrt(J01),
        lam=100.0, tau=1.0, x0=(0.0, 0.0),
    )
    instance = create_problem_instance(disk, BetaField.uniform(), nl, 100.0, modes=64, order=48)
    solver = create_critical_point_solver(instance, SolverSettings(restarts=2, seed=0))
    return solver.solve_three(bundle, refine=True)


@pytest.mark.slow
class TestWorkedDiskAtSixtyFourModes:
    def test_two_nontrivial_nonnegative_solutions(self, fine_report):
        assert fine_report.nontrivial_distinct_count >= 2
        nontrivial = [p for p in fine_report.points if not p.trivial]
        for point in nontrivial:
            assert point.residual < 1e-8
            assert point.nonnegative
        for key, distance in fine_report.distances.items():
            if "w1" not in key:
                assert distance > 1e-3

    def test_three_critical_point_structure(self, fine_report):
        w1, w2, w3 = (fine_report.point(label) for label in ("w1", "w2", "w3"))
        assert w1.phi < fine_report.gamma**2
        assert w2.phi > fine_report.gamma**2
        assert w3.residual < 1e-6
        assert w3.energy >= max(w1.energy, w2.energy) - 1e-9
        assert fine_report.distances["w1-w3"] > fine_report.delta_dist
        assert fine_report.distances["w2-w3"] > fine_report.delta_dist

    def test_doubling_the_modes_leaves_critical_values_stable(self, fine_report):
        refinement = fine_report.diagnostics["galerkin_refinement"]
        assert refinement["modes"] == [64, 128]
        labels = [p.label for p in fine_report.points]
        assert set(labels) <= set(refinement)
        for label in labels:
            assert refinement[label]["relative_change"] < 1e-4
