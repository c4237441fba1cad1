"""
Explicit constants, thresholds and hypothesis verdicts.
"""

import math

import numpy as np
import pytest

from src.errors import (
    GrowthRangeError,
    NoAdmissibleRhoError,
    PotentialNonpositiveError,
    PreconditionError,
    RangeError,
)
from src.spectral import DomainSpec
from src.variational import (
    GrowthCertificate,
    Nonlinearity,
    build_constants_bundle,
    check_AI,
    check_ball_inside,
    check_rho_gamma,
    chi_bound,
    default_ball,
    exploratory_bundle,
    geometry_constants,
    k_constants,
    lambda_star,
    mu1_value,
    mu2_value,
    mu_interval,
    psi_sup_bound,
    recommend_gamma,
    unit_ball_measure,
)
from tests.conftest import J01

C2_DISK = 1.0 / math.sqrt(J01)


@pytest.fixture
def worked_bundle(unit_disk, worked_nonlinearity):
    return build_constants_bundle(
        unit_disk, 1.0, 1.0, worked_nonlinearity, c1=0.9, cq=0.8, c2=C2_DISK,
        lam=100.0, tau=1.0, x0=(0.0, 0.0),
    )


class TestGeometry:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_unit_ball_measure_matches_gamma_formula(self, n):
        expected = math.pi ** (n / 2) / math.gamma(n / 2 + 1)
        assert unit_ball_measure(n) == pytest.approx(expected, rel=1e-12)

    def test_geometry_constants_for_unit_disk(self):
        g, h = geometry_constants(2, 1.0, math.pi)
        assert g == pytest.approx(1.5 * math.pi)
        assert h == pytest.approx(13.0 * math.pi / 8.0)

    def test_k_constants(self):
        k1, k2 = k_constants(2, 1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 13.0 * math.pi / 8.0)
        assert k1 == pytest.approx(13.0 * math.sqrt(2.0) / 2.0)
        assert k2 == pytest.approx(2.0**1.5 * 13.0 / 6.0)

    def test_k_constants_reject_critical_q(self):
        with pytest.raises(GrowthRangeError):
            k_constants(2, 1.0, 1.0, 1.0, 1.0, 1.0, 4.0, 1.0)

    def test_k_constants_reject_nonpositive_inputs(self):
        with pytest.raises(RangeError):
            k_constants(2, 1.0, 1.0, 1.0, 0.0, 1.0, 3.0, 1.0)

    def test_ball_inside(self, unit_disk, square):
        assert check_ball_inside(unit_disk, (0.0, 0.0), 1.0)
        assert not check_ball_inside(unit_disk, (0.0, 0.0), 1.1)
        assert not check_ball_inside(unit_disk, (2.0, 0.0), 0.1)
        x0, tau = default_ball(square)
        assert np.allclose(x0, [math.pi / 2, math.pi / 2])
        assert tau == pytest.approx(0.99 * math.pi / 2)


class TestThresholds:
    def test_lambda_star_for_worked_disk(self, worked_nonlinearity):
        star = lambda_star(2, 1.0, 1.0, math.pi, 1.0, worked_nonlinearity)
        assert star.value == pytest.approx(58.5, rel=1e-10)
        assert star.rho_bar == pytest.approx(2.0 / 3.0, abs=1e-6)
        assert not star.limit_at_zero

    def test_lambda_star_accepts_a_callable(self):
        star = lambda_star(2, 1.0, 1.0, math.pi, 1.0, lambda t: t**3 / 3.0 - t**4 / 4.0)
        assert star.value == pytest.approx(58.5, rel=1e-10)

    def test_lambda_star_without_admissible_rho(self):
        with pytest.raises(NoAdmissibleRhoError):
            lambda_star(2, 1.0, 1.0, math.pi, 1.0, lambda t: -t * t)

    def test_mu1_needs_positive_potential(self):
        with pytest.raises(PotentialNonpositiveError):
            mu1_value(2, 1.0, 1.0, 1.0, 0.5, Nonlinearity.polynomial([0.0, -1.0]))

    def test_mu1_at_rho_bar_is_lambda_star(self, worked_nonlinearity):
        h = 13.0 * math.pi / 8.0
        assert mu1_value(2, 1.0, 1.0, h, 2.0 / 3.0, worked_nonlinearity) == pytest.approx(58.5)

    def test_mu2_without_growth_is_infinite(self):
        assert mu2_value(2, 1.0, 1.0, 1.0, 0.5, 0.0, 0.0, 3.0, 1.0, 1.0) == math.inf

    def test_chi_bound_times_mu2_is_one(self):
        n, tau, beta0, beta_sup, q = 2, 0.8, 1.5, 2.5, 3.0
        a1, a2, c1, cq, gamma = 0.3, 1.2, 0.7, 0.9, 0.25
        _, h = geometry_constants(n, tau, math.pi)
        k1, k2 = k_constants(n, tau, beta0, beta_sup, c1, cq, q, h)
        mu2 = mu2_value(n, tau, beta0, h, gamma, a1, a2, q, k1, k2)
        chi = chi_bound(gamma**2, a1, a2, q, c1, cq, beta_sup)
        assert chi * mu2 == pytest.approx(1.0, abs=1e-12)
        assert psi_sup_bound(gamma**2, a1, a2, q, c1, cq, beta_sup) == pytest.approx(gamma**2 * chi)

    def test_rho_gamma_condition(self):
        g, _ = geometry_constants(2, 1.0, math.pi)
        assert check_rho_gamma(0.5, 1.0, g)
        assert not check_rho_gamma(0.4, 1.0, g)

    def test_ai_margin_sign(self, worked_nonlinearity):
        holds, margin = check_AI(2.0 / 3.0, 0.01, 0.0, 1.0, 3.0, 1.0, 1.0, worked_nonlinearity)
        assert holds
        assert margin == pytest.approx(1.0 / 9.0 - 0.01)
        holds, _ = check_AI(2.0 / 3.0, 1.0, 0.0, 1.0, 3.0, 1.0, 1.0, worked_nonlinearity)
        assert not holds

    def test_recommended_gamma_is_capped_by_rho(self):
        g, h = geometry_constants(2, 1.0, math.pi)
        gamma = recommend_gamma(2, 1.0, 1.0, h, g, 2.0 / 3.0, 1.0, 1e-12, 100.0, 2.0)
        assert gamma == pytest.approx(0.5 * math.sqrt(g) * 2.0 / 3.0)


class TestConstantsBundle:
    def test_worked_disk_verdicts(self, worked_bundle):
        b = worked_bundle
        assert b.lambda_star == pytest.approx(58.5, rel=1e-10)
        assert b.rho == pytest.approx(2.0 / 3.0, abs=1e-6)
        assert b.mu1 == pytest.approx(58.5, rel=1e-8)
        assert b.mu1 < b.mu2
        assert b.interval_valid
        assert b.ai_flag and b.rho_gamma_flag and b.aii_flag
        assert b.lambda_in_interval
        assert b.provenance == "indicative"
        assert "gamma" in b.notes

    def test_mu_interval_agrees_with_bundle(self, worked_bundle, worked_nonlinearity):
        mu1, mu2, valid = mu_interval(worked_bundle, worked_nonlinearity)
        assert (mu1, mu2, valid) == (worked_bundle.mu1, worked_bundle.mu2, True)

    def test_explicit_gamma_and_rho(self, unit_disk, worked_nonlinearity):
        b = build_constants_bundle(
            unit_disk, 1.0, 1.0, worked_nonlinearity, 1.0, 1.0, C2_DISK,
            gamma=0.05, rho=0.5, lam=80.0, tau=1.0, x0=(0.0, 0.0),
        )
        assert b.gamma == 0.05
        assert b.rho == 0.5
        assert "gamma" not in b.notes

    def test_ball_must_fit(self, unit_disk, worked_nonlinearity):
        with pytest.raises(PreconditionError):
            build_constants_bundle(
                unit_disk, 1.0, 1.0, worked_nonlinearity, 1.0, 1.0, 1.0,
                tau=0.6, x0=(0.5, 0.0),
            )

    def test_growth_certificate_required(self, unit_disk):
        nl = Nonlinearity.polynomial([0.0, 1.0, 0.0, -1.0])
        with pytest.raises(PreconditionError):
            build_constants_bundle(unit_disk, 1.0, 1.0, nl, 1.0, 1.0, 1.0)

    def test_to_dict(self, worked_bundle):
        values = worked_bundle.to_dict()
        assert values["x0"] == [0.0, 0.0]
        assert values["lambda_in_interval"] is True
        assert values["provenance"] == "indicative"

    def test_three_dimensional_box(self):
        # q must stay below 2n/(n-1) = 3
        nl = Nonlinearity.truncated(
            Nonlinearity.bump(2.0, 1.0), 1.0, growth=GrowthCertificate(0.0, 1.0, 2.5)
        )
        box = DomainSpec.rectangle(2.0, 2.0, 2.0)
        b = build_constants_bundle(box, 1.0, 1.0, nl, 1.0, 1.0, 1.0)
        assert b.dimension == 3
        assert b.tau == pytest.approx(0.99)
        assert b.omega == pytest.approx(4.0 * math.pi / 3.0)


class TestExploratoryBundle:
    def test_flags_are_off(self, square):
        b = exploratory_bundle(square, gamma=1.0, beta0=1.0, beta_sup=1.0, lam=5.0)
        assert not (b.ai_flag or b.rho_gamma_flag or b.aii_flag or b.interval_valid)
        assert math.isnan(b.K1) and math.isnan(b.c2)
        assert b.notes["mode"].startswith("exploratory")

    def test_gamma_must_be_positive(self, square):
        with pytest.raises(PreconditionError):
            exploratory_bundle(square, gamma=0.0, beta0=1.0, beta_sup=1.0)


def test_ai_forces_a_nonempty_window():
    rng = np.random.default_rng(7)
    exceptions = 0
    holds_count = 0
    for _ in range(10_000):
        n = int(rng.integers(2, 4))
        tau = rng.uniform(0.1, 2.0)
        measure = unit_ball_measure(n) * tau**n * rng.uniform(1.0, 6.0)
        beta0 = rng.uniform(0.5, 2.0)
        beta_sup = beta0 * rng.uniform(1.0, 3.0)
        q = rng.uniform(1.1, 2.0 * n / (n - 1) - 0.05)
        a1, a2 = rng.uniform(0.0, 1.0), rng.uniform(0.1, 2.0)
        c1, cq = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
        gamma, rho = rng.uniform(0.01, 2.0), rng.uniform(0.05, 2.0)
        coef, power = rng.uniform(0.1, 50.0), rng.uniform(1.5, 3.0)

        def F(t, coef=coef, power=power):
            return coef * t**power

        _, h = geometry_constants(n, tau, measure)
        k1, k2 = k_constants(n, tau, beta0, beta_sup, c1, cq, q, h)
        holds, _ = check_AI(rho, gamma, a1, a2, q, k1, k2, F)
        if holds:
            holds_count += 1
            mu1 = mu1_value(n, tau, beta0, h, rho, F)
            mu2 = mu2_value(n, tau, beta0, h, gamma, a1, a2, q, k1, k2)
            exceptions += not mu1 < mu2
    assert holds_count > 0
    assert exceptions == 0
