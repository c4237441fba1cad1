"""
Shared fixtures for the Half-Pass test suite.
"""

import math

import numpy as np
import pytest

from src.managers import create_config_manager
from src.spectral import DomainSpec
from src.variational import (
    BetaField,
    GrowthCertificate,
    Nonlinearity,
    SubquadraticCertificate,
    create_problem_instance,
)

J01 = 2.404825557695773
SQUARE_EIGENVALUES = [2.0, 5.0, 5.0, 8.0, 10.0, 10.0, 13.0, 13.0, 17.0, 17.0]

WORKED_DISK_CFG = """
[domain]
kind = disk
radius = 1

[nonlinearity]
kind = truncated
base = bump
m = 2
zeta = 1
a1 = 0
a2 = 1
q = 3
sign = true
b = 1/12
l = 1

[variational]
tau = 1
x0 = 0, 0
lambda = 100

[solver]
modes = 12
quadrature_order = 32
restarts = 1
seed = 3

[embedding]
modes = 8
restarts = 2
ascent_steps = 20

[output]
grid_resolution = 11
"""


@pytest.fixture
def square():
    return DomainSpec.rectangle(math.pi, math.pi)


@pytest.fixture
def unit_disk():
    return DomainSpec.disk(1.0)


@pytest.fixture
def worked_nonlinearity():
    """f(t) = t²(1 - t) on (0, 1], zero elsewhere."""
    return Nonlinearity.truncated(
        Nonlinearity.bump(2.0, 1.0),
        1.0,
        growth=GrowthCertificate(0.0, 1.0, 3.0),
        sign=True,
        subquadratic=SubquadraticCertificate(1.0 / 12.0, 1.0),
    )


@pytest.fixture
def worked_instance(unit_disk, worked_nonlinearity):
    return create_problem_instance(
        unit_disk, BetaField.uniform(1.0), worked_nonlinearity, 100.0, modes=12, order=32
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture
def testing_config():
    return create_config_manager(environment="testing")


@pytest.fixture
def worked_cfg_file(tmp_path):
    path = tmp_path / "worked_disk.cfg"
    path.write_text(WORKED_DISK_CFG, encoding="utf-8")
    return path
