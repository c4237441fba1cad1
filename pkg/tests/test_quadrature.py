"""
Gauss rules and the midpoint grid.
"""

import math

import numpy as np
import pytest

from src.errors import RangeError
from src.spectral import DomainSpec, build_quadrature, eigenpairs, midpoint_grid, mode_table


class TestGaussRules:
    def test_measure(self, square, unit_disk):
        assert build_quadrature(square, 16).integrate(np.ones(256)) == pytest.approx(math.pi**2)
        rule = build_quadrature(unit_disk, 16)
        assert rule.integrate(np.ones(rule.size)) == pytest.approx(math.pi)

    def test_kinds_and_sizes(self, square, unit_disk):
        assert build_quadrature(square, 8).kind == "gauss-tensor"
        assert build_quadrature(square, 8).size == 64
        disk_rule = build_quadrature(unit_disk, 8)
        assert disk_rule.kind == "gauss-polar"
        assert disk_rule.size == 8 * 16

    def test_polynomial_moment_on_disk(self, unit_disk):
        rule = build_quadrature(unit_disk, 12)
        r2 = np.sum(rule.nodes**2, axis=1)
        assert rule.integrate(r2) == pytest.approx(math.pi / 2, rel=1e-13)

    def test_three_dimensional_box(self):
        box = DomainSpec.rectangle(1.0, 2.0, 3.0)
        rule = build_quadrature(box, 6)
        assert rule.nodes.shape == (216, 3)
        assert rule.integrate(np.prod(rule.nodes, axis=1)) == pytest.approx(0.5 * 2.0 * 4.5)

    def test_nodes_lie_inside(self, unit_disk):
        rule = build_quadrature(unit_disk, 20)
        assert np.all(unit_disk.contains(rule.nodes, slack=0.0))
        assert np.all(rule.weights > 0.0)

    def test_order_below_two(self, square):
        with pytest.raises(RangeError):
            build_quadrature(square, 1)

    def test_cached(self, square):
        assert build_quadrature(square, 10) is build_quadrature(square, 10)


class TestMidpointGrid:
    @pytest.mark.slow
    def test_agrees_with_gauss_on_disk(self, unit_disk):
        pair = eigenpairs(unit_disk, 1)
        grid = midpoint_grid(unit_disk, 512)
        values = mode_table(pair, grid.nodes)[0]
        assert grid.integrate(values**2) == pytest.approx(1.0, rel=5e-3)

    def test_drops_points_outside(self, unit_disk):
        grid = midpoint_grid(unit_disk, 10)
        assert grid.size < 100
        assert np.all(unit_disk.contains(grid.nodes))

    def test_resolution_must_be_positive(self, square):
        with pytest.raises(RangeError):
            midpoint_grid(square, 0)
