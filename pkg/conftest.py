"""
Shared fixtures: canonical boundary data, sources, majorants and quadrature specs.
"""

import json

import pytest

from src.boundary_data import BivarPoly, HoelderCusp, TrigPoly, constant
from src.majorants import PowerLaw
from src.quadrature import QuadratureSpec


@pytest.fixture
def polar_spec():
    return QuadratureSpec()


@pytest.fixture
def exact_spec():
    return QuadratureSpec(green_potential="exact")


@pytest.fixture
def e_it():
    return TrigPoly.from_dict({1: 1.0})


@pytest.fixture
def e_minus_it():
    return TrigPoly.from_dict({-1: 1.0})


@pytest.fixture
def zero_data():
    return constant(0.0)


@pytest.fixture
def cusp_half():
    return HoelderCusp(0.5, 0.0)


@pytest.fixture
def cusp_three_quarters():
    return HoelderCusp(0.75, 0.0)


@pytest.fixture
def g_64():
    return BivarPoly.from_dict({(0, 0): 64.0})


@pytest.fixture
def omega_half():
    return PowerLaw(0.5)


@pytest.fixture
def omega_lipschitz():
    return PowerLaw(1.0)


@pytest.fixture
def write_config(tmp_path):
    """Write a run config dict to a temporary JSON file and return its path."""
    def _write(payload, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write
