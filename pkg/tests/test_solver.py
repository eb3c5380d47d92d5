"""
Tests for the biharmonic solver: representation terms, derivatives and checks

Run with: python -m pytest tests/
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from src.boundary_data import BivarPoly, TrigPoly, constant
from src.quadrature import QuadratureSpec
from src.solver import (
    GridSpec,
    boundary_trace_check,
    exact_green_potential,
    green_potential,
    lambda_f,
    pde_residual,
    poisson_extension,
    q_transform,
    q_transform_derivatives,
    solve,
    wirtinger,
)
from src.utils.validators import DomainError

POINTS = (0.0, 0.3 + 0.4j, -0.5 + 0.1j, 0.7j, 0.85 * np.exp(2.0j))


def test_poisson_extension_examples(e_it, e_minus_it, polar_spec):
    """Test P[e^{it}] = z, P[e^{−it}] = z̄ and P[5] = 5."""
    z = 0.3 + 0.4j
    assert poisson_extension(e_it, z, polar_spec) == pytest.approx(z, abs=1e-12)
    assert poisson_extension(e_minus_it, z, polar_spec) == pytest.approx(np.conj(z), abs=1e-12)
    assert poisson_extension(constant(5.0), z, polar_spec) == pytest.approx(5.0, abs=1e-12)


def test_q_transform_examples(e_it, e_minus_it, polar_spec):
    """Test Q[e^{it}] = 0, Q[e^{−it}] = z̄(1 − |z|²) and Q[ψ](0) = 0."""
    for z in POINTS:
        assert q_transform(e_it, z, polar_spec) == pytest.approx(0.0, abs=1e-12)
        expected = np.conj(z) * (1 - abs(z) ** 2)
        assert q_transform(e_minus_it, z, polar_spec) == pytest.approx(expected, abs=1e-12)


def test_q_transform_derivatives_lambda(e_minus_it, polar_spec):
    """Test Λ of Q[e^{−it}] is r² + |1 − 2r²|."""
    for r in (0.2, 0.6, 0.9):
        dz, dzbar = q_transform_derivatives(e_minus_it, r * np.exp(0.4j), polar_spec)
        assert abs(dz) + abs(dzbar) == pytest.approx(r * r + abs(1 - 2 * r * r), abs=1e-10)


def test_manufactured_solution_exact(g_64, exact_spec, zero_data):
    """Test g = 64 with zero data gives f = (1 − |z|²)²."""
    field = solve(zero_data, zero_data, g_64, exact_spec)
    for z in POINTS:
        assert field.value(z) == pytest.approx((1 - abs(z) ** 2) ** 2, abs=1e-12)


def test_manufactured_solution_polar(g_64, polar_spec, zero_data):
    """Test the polar Green potential reproduces (1 − |z|²)² to 1e-6."""
    field = solve(zero_data, zero_data, g_64, polar_spec)
    for z in (0.0, 0.5, 0.3 + 0.6j):
        assert field.value(z) == pytest.approx((1 - abs(z) ** 2) ** 2, abs=1e-6)


def test_harmonic_solution(e_it, zero_data, exact_spec):
    """Test ψ = e^{it}, φ = 0, g = 0 gives f = z."""
    field = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    for z in POINTS:
        assert field.value(z) == pytest.approx(z, abs=1e-10)


def test_antiholomorphic_solution(e_minus_it, exact_spec):
    """Test φ = 1, ψ = e^{−it}, g = 0 gives f = z̄."""
    field = solve(constant(1.0), e_minus_it, BivarPoly.zero(), exact_spec)
    for z in POINTS:
        assert field.value(z) == pytest.approx(np.conj(z), abs=1e-10)


def test_wirtinger_examples(e_it, zero_data, g_64, exact_spec, polar_spec):
    """Test ∂f for f = z and for the manufactured solution."""
    harmonic = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    dz, dzbar = wirtinger(harmonic, 0.2 + 0.3j)
    assert dz == pytest.approx(1.0, abs=1e-8)
    assert dzbar == pytest.approx(0.0, abs=1e-8)

    z = 0.4 + 0.1j
    expected = -2 * np.conj(z) * (1 - abs(z) ** 2)
    manufactured = solve(zero_data, zero_data, g_64, exact_spec)
    assert wirtinger(manufactured, 0.0) == pytest.approx((0.0, 0.0), abs=1e-12)
    assert wirtinger(manufactured, z)[0] == pytest.approx(expected, abs=1e-12)
    polar = solve(zero_data, zero_data, g_64, polar_spec)
    assert wirtinger(polar, z)[0] == pytest.approx(expected, abs=1e-5)


def test_wirtinger_margin(e_it, zero_data, exact_spec):
    """Test derivatives need |z| < 1 − 1e-3."""
    field = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    with pytest.raises(DomainError):
        wirtinger(field, 0.9995)


def test_lambda_f_examples(e_it, e_minus_it, zero_data, g_64, exact_spec):
    """Test Λ_f = 1 for z and z̄ and 1.5 at r = 0.5 for the manufactured solution."""
    assert lambda_f(solve(zero_data, e_it, BivarPoly.zero(), exact_spec), 0.3j) == pytest.approx(1.0, abs=1e-8)
    assert lambda_f(solve(constant(1.0), e_minus_it, BivarPoly.zero(), exact_spec), 0.3j) == pytest.approx(1.0, abs=1e-8)
    assert lambda_f(solve(zero_data, zero_data, g_64, exact_spec), 0.5) == pytest.approx(1.5, abs=1e-12)


def test_wirtinger_matches_finite_differences(exact_spec):
    """Test analytic derivatives against centered differences of the values."""
    phi = TrigPoly.from_dict({1: 1j, -2: 0.5})
    psi = TrigPoly.from_dict({0: 1.0, 3: -0.4 + 0.2j, -1: 0.7})
    g = BivarPoly.from_dict({(1, 0): 2.0, (1, 1): -3.0 + 1j})
    field = solve(phi, psi, g, exact_spec)
    z, h = 0.35 - 0.25j, 1e-5
    dx = (field.value(z + h) - field.value(z - h)) / (2 * h)
    dy = (field.value(z + 1j * h) - field.value(z - 1j * h)) / (2 * h)
    dz, dzbar = field.wirtinger(z)
    assert dz == pytest.approx(0.5 * (dx - 1j * dy), abs=1e-6)
    assert dzbar == pytest.approx(0.5 * (dx + 1j * dy), abs=1e-6)


def test_pde_residual(e_it, zero_data, g_64, exact_spec):
    """Test the discrete bi-Laplacian recovers g and vanishes on harmonic data."""
    manufactured = solve(zero_data, zero_data, g_64, exact_spec)
    z = 0.2
    assert pde_residual(manufactured, g_64, z, 1e-2 * (1 - abs(z))) <= 1e-3
    harmonic = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    assert pde_residual(harmonic, BivarPoly.zero(), z, 0.05) <= 1e-6
    flat = solve(zero_data, constant(5.0), BivarPoly.zero(), exact_spec)
    assert pde_residual(flat, BivarPoly.zero(), 0.1j, 0.05) <= 1e-6


def test_pde_residual_rejects_large_stencil(g_64, zero_data, exact_spec):
    """Test the stencil must stay 4h away from the circle."""
    field = solve(zero_data, zero_data, g_64, exact_spec)
    with pytest.raises(DomainError):
        pde_residual(field, g_64, 0.9, 0.05)


def test_boundary_trace_manufactured(g_64, zero_data, exact_spec):
    """Test trace errors (1 − r²)² shrink towards the boundary."""
    field = solve(zero_data, zero_data, g_64, exact_spec)
    radii = [0.9, 0.99, 0.999]
    report = boundary_trace_check(field, radii, n_angles=16)
    assert report.decreasing
    for row, r in zip(report.rows, radii):
        assert row.value_error == pytest.approx((1 - r * r) ** 2, abs=1e-12)
    assert report.rows[0].derivative_error == pytest.approx(2 * 0.9 * (1 - 0.81), abs=1e-12)
    assert report.rows[2].derivative_error is None


def test_boundary_trace_harmonic(e_it, zero_data, exact_spec):
    """Test the trace error of f = z is 1 − r."""
    field = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    report = boundary_trace_check(field, [0.5, 0.9, 0.99], n_angles=16)
    assert report.decreasing
    assert [row.value_error for row in report.rows] == pytest.approx([0.5, 0.1, 0.01], abs=1e-6)


def test_boundary_trace_hoelder_cusp(cusp_half, zero_data, polar_spec):
    """Test the trace error of a β = 0.5 cusp at r = 0.99 stays within 10·(1 − r)^β."""
    field = solve(zero_data, cusp_half, BivarPoly.zero(), polar_spec)
    report = boundary_trace_check(field, [0.9, 0.99], n_angles=64)
    assert report.rows[1].value_error <= 10.0 * 0.01 ** 0.5
    assert report.rows[1].value_error < report.rows[0].value_error


def test_linearity_in_source(exact_spec):
    """Test solve(φ, ψ, g₁ + g₂) = solve(φ, ψ, g₁) + solve(0, 0, g₂)."""
    phi = TrigPoly.from_dict({2: 1.0})
    psi = TrigPoly.from_dict({-1: 1j, 1: 0.5})
    g1 = BivarPoly.from_dict({(0, 0): 3.0})
    g2 = BivarPoly.from_dict({(2, 1): 1.0 - 1j})
    combined = solve(phi, psi, g1 + g2, exact_spec)
    first = solve(phi, psi, g1, exact_spec)
    second = solve(constant(0.0), constant(0.0), g2, exact_spec)
    for z in POINTS:
        assert combined.value(z) == pytest.approx(first.value(z) + second.value(z), abs=1e-12)


def test_conjugation_symmetry(exact_spec):
    """Test conjugated data give f̃(z) = conj(f(z̄))."""
    phi = TrigPoly.from_dict({1: 1j})
    psi = TrigPoly.from_dict({1: 1 + 2j, -2: 0.5 - 1j})
    g = BivarPoly.from_dict({(1, 0): 1 + 1j, (1, 1): 3.0})

    def flip(f):
        return TrigPoly.from_dict({k: np.conj(c) for k, c in f.coeffs})

    field = solve(phi, psi, g, exact_spec)
    mirrored = solve(flip(phi), flip(psi), g.reflected(), exact_spec)
    for z in (0.3 + 0.2j, -0.5 + 0.1j, 0.6j):
        assert mirrored.value(z) == pytest.approx(np.conj(field.value(np.conj(z))), abs=1e-10)


def test_exact_green_potential_monomials():
    """Test closed-form J₃ for g = 1, z and |z|²."""
    z = 0.3 - 0.45j
    s = abs(z) ** 2
    cases = (
        ({(0, 0): 1.0}, -(1 - s) ** 2 / 64),
        ({(1, 0): 1.0}, -z * (1 - s) ** 2 / 192),
        ({(1, 1): 1.0}, -(s ** 3 - 3 * s + 2) / 576),
    )
    for terms, expected in cases:
        j3 = exact_green_potential(BivarPoly.from_dict(terms))
        assert complex(j3(z)) == pytest.approx(expected, abs=1e-15)


def test_exact_green_potential_vanishes_on_circle():
    """Test the closed form satisfies zero value and zero normal-derivative traces."""
    j3 = exact_green_potential(BivarPoly.from_dict({(3, 1): 1.0, (0, 2): 2j}))
    for t in np.linspace(0, 2 * math.pi, 7):
        zeta = np.exp(1j * t)
        assert complex(j3(zeta)) == pytest.approx(0.0, abs=1e-13)
        assert complex(j3.dzbar()(zeta)) == pytest.approx(0.0, abs=1e-13)


def test_exact_and_polar_green_potential_agree(polar_spec):
    """Test the polar rule against the closed form for g = z."""
    g = BivarPoly.from_dict({(1, 0): 1.0})
    z = 0.3 + 0.2j
    exact = complex(exact_green_potential(g)(z))
    assert green_potential(g, z, polar_spec) == pytest.approx(exact, abs=1e-6)


def test_grid_spec_points():
    """Test grid layout, the empty grid and the radius-zero point."""
    assert GridSpec(n_radii=0).points() == []
    assert GridSpec(n_radii=1, r_min=0.0, r_max=0.0).points() == [0j]
    points = GridSpec(n_radii=3, n_angles=4, r_min=0.0, r_max=0.5).points()
    assert len(points) == 1 + 2 * 4
    assert points[1] == pytest.approx(0.25)


def test_grid_spec_validation():
    """Test radii must lie in [0, 1) and be ordered."""
    with pytest.raises(ValidationError):
        GridSpec(r_max=1.0)
    with pytest.raises(ValidationError):
        GridSpec(r_min=0.6, r_max=0.5)


def test_values_many_preserves_order(e_it, zero_data, exact_spec):
    """Test the parallel evaluation returns values in input order."""
    field = solve(zero_data, e_it, BivarPoly.zero(), exact_spec)
    points = [complex(v) for v in 0.8 * np.exp(1j * np.linspace(0, 6, 40))]
    assert field.values_many(points) == pytest.approx(np.array(points), abs=1e-10)
    rows = field.evaluate_many(points[:5])
    assert [row[0] for row in rows] == pytest.approx(points[:5], abs=1e-10)


def test_evaluation_is_deterministic(cusp_half, zero_data):
    """Test repeated solves produce bit-identical values."""
    spec = QuadratureSpec(n_theta_base=64)
    first = solve(zero_data, cusp_half, BivarPoly.zero(), spec).value(0.7 + 0.1j)
    second = solve(zero_data, cusp_half, BivarPoly.zero(), spec).value(0.7 + 0.1j)
    assert first == second


@pytest.mark.slow
def test_manufactured_solution_full_grid(g_64, polar_spec, zero_data):
    """Test the polar solver matches (1 − |z|²)² to 1e-6 on a 32 x 128 grid up to r = 0.95."""
    field = solve(zero_data, zero_data, g_64, polar_spec)
    points = GridSpec(n_radii=32, n_angles=128, r_min=0.0, r_max=0.95).points()
    values = np.asarray(field.values_many(points))
    exact = (1 - np.abs(np.asarray(points)) ** 2) ** 2
    assert np.max(np.abs(values - exact)) <= 1e-6


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
