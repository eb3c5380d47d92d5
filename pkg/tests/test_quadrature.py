"""
Tests for the circle trapezoid rule and the polar disk rule

Run with: python -m pytest tests/
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from src.kernels import green_biharmonic, poisson
from src.quadrature import DiskRule, QuadratureSpec, circle_integral, circle_nodes, disk_integral
from src.utils.validators import DomainError, QuadratureError


def test_circle_rule_exact_for_trig_polynomials():
    """Test mean of e^{ikt} is 1 for k = 0 and 0 for 0 < |k| < n."""
    assert circle_integral(lambda t: np.ones_like(t), 16) == pytest.approx(1.0)
    for k in range(1, 16):
        assert circle_integral(lambda t: np.exp(1j * k * t), 16) == pytest.approx(0.0, abs=1e-14)
        assert circle_integral(lambda t: np.exp(-1j * k * t), 16, offset=0.3) == pytest.approx(0.0, abs=1e-14)


def test_circle_rule_poisson_mean():
    """Test the Poisson kernel integrates to 1 inside the disk."""
    assert circle_integral(lambda t: poisson(0.5, t), 128) == pytest.approx(1.0, abs=1e-12)


def test_circle_rule_rejects_non_finite_values():
    """Test a non-finite integrand raises QuadratureError naming the node."""
    with pytest.raises(QuadratureError, match="node 0"):
        circle_integral(lambda t: 1.0 / np.sin(t), 8)


def test_circle_nodes_are_cached_read_only():
    """Test node arrays are shared and immutable."""
    nodes = circle_nodes(32, 0.0)
    assert nodes is circle_nodes(32, 0.0)
    with pytest.raises(ValueError):
        nodes[0] = 1.0


def test_disk_rule_polynomials():
    """Test ∫1 dA = π and ∫|w|² dA = π/2."""
    spec = QuadratureSpec()
    assert disk_integral(lambda w: np.ones(w.shape), spec) == pytest.approx(math.pi, rel=1e-12)
    assert disk_integral(lambda w: np.abs(w) ** 2, spec) == pytest.approx(math.pi / 2, rel=1e-12)


def test_disk_rule_green_integral():
    """Test ∫G(z, w) dA(w) = −(π/4)(1 − |z|²)² at z = 0.3."""
    z = 0.3
    value = disk_integral(lambda w: green_biharmonic(z, w), QuadratureSpec(), marked=z)
    assert value.real == pytest.approx(-(math.pi / 4) * (1 - z ** 2) ** 2, abs=1e-6)


def test_disk_rule_converges_under_refinement():
    """Test doubling both node counts changes the Green integral by < 1e-6."""
    z = 0.9 * np.exp(0.4j)
    coarse = disk_integral(lambda w: green_biharmonic(z, w), QuadratureSpec(), marked=z)
    fine = disk_integral(lambda w: green_biharmonic(z, w), QuadratureSpec(n_theta_base=512, n_r=128), marked=z)
    assert abs(coarse - fine) < 1e-6


def test_disk_rule_marks_point():
    """Test the marked radius becomes a panel break and arg z a node angle."""
    z = 0.5j
    rule = DiskRule(QuadratureSpec(), marked=z)
    assert rule.breaks == (0.0, 0.25, 0.5, 0.75, 1.0)
    angles = np.angle(rule.points[:256])
    assert np.min(np.abs(angles - math.pi / 2)) < 1e-12
    plain = DiskRule(QuadratureSpec(diagonal_refine=False), marked=z)
    assert plain.breaks == (0.0, 1.0)


def test_disk_rule_rejects_non_finite_values():
    """Test QuadratureError on a singular integrand."""
    with pytest.raises(QuadratureError):
        disk_integral(lambda w: np.where(np.abs(w) > 0.5, np.inf, 1.0), QuadratureSpec())


def test_angular_adaptivity():
    """Test n_theta = max(base, ceil(c/(1 − |z|))) and the boundary cut-off."""
    spec = QuadratureSpec()
    assert spec.n_theta(0.5) == 256
    assert spec.n_theta(0.99) == 1600
    with pytest.raises(DomainError):
        spec.n_theta(1 - 1e-7)


def test_spec_validation():
    """Test spec fields are range-checked and unknown keys are rejected."""
    with pytest.raises(ValidationError):
        QuadratureSpec(n_theta_base=8)
    with pytest.raises(ValidationError):
        QuadratureSpec(green_potential="adaptive")
    with pytest.raises(ValidationError):
        QuadratureSpec(n_phi=10)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
