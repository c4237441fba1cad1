"""
Spectral fields, norms and embedding-constant estimates.
"""

import math

import numpy as np
import pytest

from src.errors import CriticalExponentError, RangeError
from src.spectral import (
    SpectralBasis,
    SpectralField,
    apply_sqrt_laplacian,
    critical_exponent,
    embedding_ladder,
    estimate_embedding_constant,
    h_half_norm,
    lp_trace_norm,
    x_distance,
    x_inner,
)
from tests.conftest import J01


class TestSpectralField:
    def test_coefficient_count_must_match(self, square):
        with pytest.raises(RangeError):
            SpectralField(SpectralBasis(square, 3), [1.0, 2.0])

    def test_coefficients_must_be_finite(self, square):
        with pytest.raises(RangeError):
            SpectralField(SpectralBasis(square, 2), [1.0, np.nan])

    def test_immutable(self, square):
        u = SpectralField(SpectralBasis(square, 2), [1.0, 2.0])
        with pytest.raises(ValueError):
            u.coefficients[0] = 5.0

    def test_arithmetic(self, square):
        basis = SpectralBasis(square, 3)
        u = SpectralField(basis, [1.0, 0.0, 2.0])
        v = SpectralField.mode(basis, 2, 3.0)
        assert (u + v).coefficients.tolist() == [1.0, 3.0, 2.0]
        assert (u - v).coefficients.tolist() == [1.0, -3.0, 2.0]
        assert (2 * u).coefficients.tolist() == [2.0, 0.0, 4.0]
        assert (u / 2).coefficients.tolist() == [0.5, 0.0, 1.0]
        assert (-u).coefficients.tolist() == [-1.0, 0.0, -2.0]

    def test_fields_on_different_bases_do_not_mix(self, square):
        u = SpectralField.zeros(SpectralBasis(square, 2))
        v = SpectralField.zeros(SpectralBasis(square, 3))
        with pytest.raises(RangeError):
            u + v

    def test_mode_index_range(self, square):
        with pytest.raises(RangeError):
            SpectralField.mode(SpectralBasis(square, 2), 3)

    def test_x_coordinates(self, square):
        basis = SpectralBasis(square, 2)
        u = SpectralField(basis, [1.0, 1.0])
        assert u.x_coordinates() == pytest.approx([2.0**0.25, 5.0**0.25])
        back = SpectralField.from_x_coordinates(basis, u.x_coordinates())
        assert back.coefficients == pytest.approx(u.coefficients, rel=1e-15)

    def test_padded(self, square):
        u = SpectralField(SpectralBasis(square, 2), [1.0, 2.0])
        assert u.padded(4).coefficients.tolist() == [1.0, 2.0, 0.0, 0.0]
        assert u.padded(1).coefficients.tolist() == [1.0]


class TestNorms:
    def test_critical_exponent(self):
        assert critical_exponent(2) == 4.0
        assert critical_exponent(3) == 3.0
        with pytest.raises(RangeError):
            critical_exponent(1)

    def test_h_half_norm_of_two_modes(self, square):
        u = SpectralField(SpectralBasis(square, 2), [1.0, 1.0])
        assert h_half_norm(u) == pytest.approx(math.sqrt(math.sqrt(2.0) + math.sqrt(5.0)))

    def test_zero_field(self, unit_disk):
        assert h_half_norm(SpectralField.zeros(SpectralBasis(unit_disk, 4))) == 0.0

    def test_sqrt_laplacian_and_inner_product(self, unit_disk, rng):
        basis = SpectralBasis(unit_disk, 10)
        u = SpectralField(basis, rng.standard_normal(10))
        v = SpectralField(basis, rng.standard_normal(10))
        assert x_inner(u, v) == pytest.approx(x_inner(v, u))
        assert x_inner(u, u) == pytest.approx(h_half_norm(u) ** 2)
        assert x_inner(u, v) == pytest.approx(
            float(np.dot(apply_sqrt_laplacian(u).coefficients, v.coefficients))
        )
        assert x_distance(u, v) == pytest.approx(h_half_norm(u - v))

    def test_l2_norm_of_first_mode(self, square):
        assert lp_trace_norm(SpectralField.mode(SpectralBasis(square, 1), 1), 2.0) == pytest.approx(
            1.0, abs=1e-8
        )

    def test_l1_norm_of_first_square_mode(self, square):
        u = SpectralField.mode(SpectralBasis(square, 1), 1)
        assert lp_trace_norm(u, 1.0) == pytest.approx(8.0 / math.pi, rel=1e-8)

    @pytest.mark.parametrize("kind", ["square", "unit_disk"])
    def test_parseval(self, kind, request, rng):
        domain = request.getfixturevalue(kind)
        basis = SpectralBasis(domain, 20)
        for _ in range(5):
            u = SpectralField(basis, rng.standard_normal(20))
            assert lp_trace_norm(u, 2.0) ** 2 == pytest.approx(
                float(np.dot(u.coefficients, u.coefficients)), abs=1e-8
            )

    def test_exponent_range(self, unit_disk):
        u = SpectralField.mode(SpectralBasis(unit_disk, 1), 1)
        with pytest.raises(RangeError):
            lp_trace_norm(u, 0.5)
        with pytest.raises(RangeError):
            lp_trace_norm(u, 5.0)


class TestEmbeddingConstants:
    def test_c2_is_sharp(self, unit_disk):
        estimate = estimate_embedding_constant(
            unit_disk, 2.0, modes=8, restarts=2, ascent_steps=30
        )
        assert estimate.exact
        assert not estimate.certified
        assert estimate.estimate == pytest.approx(1.0 / math.sqrt(J01), rel=1e-8)

    def test_critical_exponent_is_refused(self, unit_disk):
        with pytest.raises(CriticalExponentError):
            estimate_embedding_constant(unit_disk, 4.0, modes=4, restarts=1)

    @pytest.mark.parametrize("p", [0.5, 4.5])
    def test_exponent_outside_range(self, unit_disk, p):
        with pytest.raises(RangeError):
            estimate_embedding_constant(unit_disk, p, modes=4, restarts=1)

    def test_reproducible_for_a_seed(self, square):
        kwargs = dict(modes=6, restarts=3, ascent_steps=20, seed=11, order=24)
        a = estimate_embedding_constant(square, 3.0, **kwargs)
        b = estimate_embedding_constant(square, 3.0, **kwargs)
        assert a.estimate == b.estimate
        assert a.to_dict()["provenance"] == "lower-bound"

    def test_ladder_is_nondecreasing(self, square):
        ladder = embedding_ladder(
            square, 3.0, [2, 4, 8], restarts=2, ascent_steps=20, order=24
        )
        values = [step.estimate for step in ladder]
        assert [step.modes for step in ladder] == [2, 4, 8]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_ladder_maximizer_attains_each_estimate(self, square):
        ladder = embedding_ladder(
            square, 3.0, [2, 4, 8], restarts=2, ascent_steps=20, order=24
        )
        for step in ladder:
            assert step.maximizer.shape == (step.modes,)
            assert np.linalg.norm(step.maximizer) == pytest.approx(1.0)
            u = SpectralField.from_x_coordinates(SpectralBasis(square, step.modes), step.maximizer)
            assert lp_trace_norm(u, 3.0, order=24) == pytest.approx(step.estimate, rel=1e-9)
