"""
Biharmonic Solver

Assembles the solution of Δ(Δf) = g in 𝔻, f = ψ and ∂_z̄ f = φ on 𝕋 from the
kernel representation

    f = P[ψ] + Q[ψ] − (1 − |z|²)·P[φ₁] − (1/16π)∫_𝔻 g(w) G(z, w) dA(w)

and exposes values, Wirtinger derivatives, Λ_f, residual and trace checks.
"""

import logging
import math
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .boundary_data import BivarPoly, CircleFunction, DiskFunction, eval_t, to_phi1
from .kernels import (
    ComplexPoint,
    as_complex,
    green_biharmonic,
    poisson,
    poisson_dz,
    poisson_dzbar,
    q_kernel,
    q_kernel_dz,
    q_kernel_dzbar,
)
from .quadrature import DiskRule, QuadratureSpec, circle_integral
from .reports import TraceReport, TraceRow
from .utils.parallel import ordered_map
from .utils.validators import DomainError, validate_interior_point, validate_radius, validate_step

logger = logging.getLogger(__name__)

GREEN_PREFACTOR = 1.0 / (16.0 * math.pi)
WIRTINGER_MARGIN = 1e-3
GREEN_FD_SCALE = 1e-5
TRACE_ANGLES = 64


class GridSpec(BaseModel):
    """Polar evaluation grid (run config key "grid")."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    n_radii: int = Field(default=16, description="Number of radial levels", ge=0)
    n_angles: int = Field(default=64, description="Angles per nonzero radius", ge=1)
    r_min: float = Field(default=0.0, description="Smallest radius", ge=0.0, lt=1.0)
    r_max: float = Field(default=0.99, description="Largest radius", ge=0.0, lt=1.0)

    @model_validator(mode='after')
    def _ordered(self):
        if self.r_min > self.r_max:
            raise ValueError(f"r_min ({self.r_min}) must not exceed r_max ({self.r_max})")
        return self

    def points(self) -> List[complex]:
        """Grid points, radius-major; a zero radius contributes the single point 0."""
        out: List[complex] = []
        theta = 2.0 * np.pi * np.arange(self.n_angles) / self.n_angles
        for r in np.linspace(self.r_min, self.r_max, self.n_radii):
            if r == 0.0:
                out.append(0j)
            else:
                out.extend(complex(v) for v in r * np.exp(1j * theta))
        return out


class FieldComponents(NamedTuple):
    p_psi: complex
    q_psi: complex
    j2: complex
    j3: complex

    @property
    def total(self) -> complex:
        return self.p_psi + self.q_psi - self.j2 - self.j3


def _arg(z: complex) -> float:
    return ComplexPoint.of(z).theta


def _anchor_value(f: CircleFunction, z: complex) -> complex:
    """f(e^{i arg z}), the constant removed by the vanishing-mean subtraction."""
    return eval_t(f, _arg(z))


def poisson_extension(psi: CircleFunction, z, spec: QuadratureSpec) -> complex:
    """P[ψ](z) = (1/2π)∫ P(z, e^{it}) ψ(e^{it}) dt."""
    z = validate_interior_point(as_complex(z))
    return circle_integral(lambda t: poisson(z, t) * psi(t), spec.n_theta(z))


def poisson_extension_derivatives(psi: CircleFunction, z, spec: QuadratureSpec) -> Tuple[complex, complex]:
    """
    (∂_z P[ψ](z), ∂_z̄ P[ψ](z)) with ψ(e^{i arg z}) subtracted under the integral.

    Both derivative kernels integrate to zero over the circle.
    """
    z = validate_interior_point(as_complex(z))
    n = spec.n_theta(z)
    base = _anchor_value(psi, z)
    dz = circle_integral(lambda t: poisson_dz(z, t) * (psi(t) - base), n)
    dzbar = circle_integral(lambda t: poisson_dzbar(z, t) * (psi(t) - base), n)
    return dz, dzbar


def q_transform(psi: CircleFunction, z, spec: QuadratureSpec) -> complex:
    """Q[ψ](z), stabilised by subtracting ψ(e^{i arg z})."""
    z = validate_interior_point(as_complex(z))
    base = _anchor_value(psi, z)
    return circle_integral(lambda t: q_kernel(z, t) * (psi(t) - base), spec.n_theta(z))


def q_transform_derivatives(psi: CircleFunction, z, spec: QuadratureSpec) -> Tuple[complex, complex]:
    """(∂_z Q[ψ](z), ∂_z̄ Q[ψ](z)) from the analytic kernel derivatives."""
    z = validate_interior_point(as_complex(z))
    n = spec.n_theta(z)
    base = _anchor_value(psi, z)
    dz = circle_integral(lambda t: q_kernel_dz(z, t) * (psi(t) - base), n)
    dzbar = circle_integral(lambda t: q_kernel_dzbar(z, t) * (psi(t) - base), n)
    return dz, dzbar


def exact_green_potential(g: DiskFunction) -> BivarPoly:
    """
    Closed form of J₃ = (1/16π)∫ g(w) G(z, w) dA(w) for polynomial g.

    For a monomial z^j z̄^k with C = 16(j+1)(j+2)(k+1)(k+2) and m = j − k the
    solution with zero traces is
    (z^{j+2} z̄^{k+2} + E_m·(−1 + ((k+2) − max(−m, 0))(1 − |z|²)))/C,
    E_m = z^m (m >= 0) or z̄^{−m} (m < 0); J₃ is minus the sum of these.
    """
    terms: Dict[Tuple[int, int], complex] = {}

    def add(j: int, k: int, value: complex) -> None:
        terms[(j, k)] = terms.get((j, k), 0j) + value

    for (j, k), a in g.terms:
        c = 16.0 * (j + 1) * (j + 2) * (k + 1) * (k + 2)
        m = j - k
        e = (m, 0) if m >= 0 else (0, -m)
        slope = (k + 2) - max(-m, 0)
        add(j + 2, k + 2, -a / c)
        add(e[0], e[1], -a * (slope - 1) / c)
        add(e[0] + 1, e[1] + 1, a * slope / c)
    return BivarPoly.from_dict(terms)


def green_potential(g: DiskFunction, z: complex, spec: QuadratureSpec, rule: Optional[DiskRule] = None) -> complex:
    """J₃(z) by the polar disk rule (anchored at z unless a rule is given)."""
    if g.is_zero:
        return 0j
    rule = rule or DiskRule(spec, marked=z)
    return GREEN_PREFACTOR * rule.integrate(lambda w: g(w) * green_biharmonic(z, w))


def green_potential_derivatives(g: DiskFunction, z: complex, spec: QuadratureSpec) -> Tuple[complex, complex]:
    """
    Wirtinger derivatives of the polar J₃ by centered differences.

    The step is h = 1e-5(1 − |z|); all four stencil points share the rule
    anchored at z so the quadrature sum varies smoothly with the point.
    """
    if g.is_zero:
        return 0j, 0j
    h = GREEN_FD_SCALE * (1.0 - abs(z))
    rule = DiskRule(spec, marked=z)
    dx = (green_potential(g, z + h, spec, rule) - green_potential(g, z - h, spec, rule)) / (2 * h)
    dy = (green_potential(g, z + 1j * h, spec, rule) - green_potential(g, z - 1j * h, spec, rule)) / (2 * h)
    return 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)


class SolutionField:
    """
    Evaluable solution of the biharmonic Dirichlet problem.

    Per-point results are cached; concurrent fills of the same key compute
    the same value, so the cache needs no locking.
    """

    def __init__(self, phi: CircleFunction, psi: CircleFunction, g: DiskFunction, spec: QuadratureSpec):
        self.phi = phi
        self.psi = psi
        self.g = g
        self.spec = spec
        self.phi1 = to_phi1(phi)
        self._exact_j3 = exact_green_potential(g) if spec.green_potential == "exact" else None
        self._values: Dict[complex, FieldComponents] = {}
        self._gradients: Dict[complex, Tuple[complex, complex]] = {}

    def j2(self, z: complex) -> complex:
        return (1.0 - abs(z) ** 2) * poisson_extension(self.phi1, z, self.spec)

    def j2_derivatives(self, z: complex) -> Tuple[complex, complex]:
        """Product rule on (1 − |z|²)·P[φ₁]."""
        p = poisson_extension(self.phi1, z, self.spec)
        pz, pzbar = poisson_extension_derivatives(self.phi1, z, self.spec)
        weight = 1.0 - abs(z) ** 2
        return -np.conj(z) * p + weight * pz, -z * p + weight * pzbar

    def j3(self, z: complex) -> complex:
        if self._exact_j3 is not None:
            return complex(self._exact_j3(z))
        return green_potential(self.g, z, self.spec)

    def j3_derivatives(self, z: complex) -> Tuple[complex, complex]:
        if self._exact_j3 is not None:
            return complex(self._exact_j3.dz()(z)), complex(self._exact_j3.dzbar()(z))
        return green_potential_derivatives(self.g, z, self.spec)

    def components(self, z) -> FieldComponents:
        """All four representation terms at z (|z| < 1)."""
        z = validate_interior_point(as_complex(z))
        cached = self._values.get(z)
        if cached is not None:
            return cached
        result = FieldComponents(
            p_psi=poisson_extension(self.psi, z, self.spec),
            q_psi=q_transform(self.psi, z, self.spec),
            j2=self.j2(z),
            j3=self.j3(z),
        )
        self._values[z] = result
        return result

    def value(self, z) -> complex:
        return self.components(z).total

    def wirtinger(self, z) -> Tuple[complex, complex]:
        z = validate_interior_point(as_complex(z), margin=WIRTINGER_MARGIN)
        cached = self._gradients.get(z)
        if cached is not None:
            return cached
        pz, pzbar = poisson_extension_derivatives(self.psi, z, self.spec)
        qz, qzbar = q_transform_derivatives(self.psi, z, self.spec)
        j2z, j2zbar = self.j2_derivatives(z)
        j3z, j3zbar = self.j3_derivatives(z)
        result = (complex(pz + qz - j2z - j3z), complex(pzbar + qzbar - j2zbar - j3zbar))
        self._gradients[z] = result
        logger.debug(f"Wirtinger derivatives at {z}: {result}")
        return result

    def values_many(self, points: Iterable[complex]) -> np.ndarray:
        """Values at many points, evaluated in parallel, input order preserved."""
        return np.asarray(ordered_map(self.value, list(points)), dtype=complex)

    def evaluate_many(self, points: Sequence[complex]) -> List[Tuple[complex, complex, complex]]:
        """(f, ∂_z f, ∂_z̄ f) at every point, in input order."""
        return ordered_map(lambda z: (self.value(z), *self.wirtinger(z)), list(points))


def solve(phi: CircleFunction, psi: CircleFunction, g: DiskFunction, spec: QuadratureSpec) -> SolutionField:
    """Build the solution field for the boundary data (φ, ψ) and source g."""
    logger.info(f"Solving biharmonic problem (green potential: {spec.green_potential})")
    return SolutionField(phi, psi, g, spec)


def wirtinger(field: SolutionField, z) -> Tuple[complex, complex]:
    """(∂_z f(z), ∂_z̄ f(z)); requires |z| < 1 − 1e-3."""
    return field.wirtinger(z)


def lambda_f(field: SolutionField, z) -> float:
    """Λ_f(z) = |∂_z f(z)| + |∂_z̄ f(z)|."""
    dz, dzbar = field.wirtinger(z)
    return abs(dz) + abs(dzbar)


def pde_residual(field: SolutionField, g: DiskFunction, z, h: float) -> float:
    """
    |Δ_h(Δ_h f)(z) − g(z)| with the 5-point Laplacian iterated (13 points).

    Raises:
        DomainError: If 1 − |z| < 4h
    """
    z = as_complex(z)
    validate_step(z, h, 4.0)
    star = ((1, 0), (-1, 0), (0, 1), (0, -1))

    def u(a: int, b: int) -> complex:
        return field.value(complex(z.real + a * h, z.imag + b * h))

    def laplacian(a: int, b: int) -> complex:
        return (sum(u(a + da, b + db) for da, db in star) - 4.0 * u(a, b)) / h ** 2

    bilaplacian = (sum(laplacian(da, db) for da, db in star) - 4.0 * laplacian(0, 0)) / h ** 2
    return abs(bilaplacian - complex(g(z)))


def boundary_trace_check(field: SolutionField, r_sequence: Sequence[float],
                         n_angles: int = TRACE_ANGLES) -> TraceReport:
    """
    Trace errors max over n_angles of |f(rζ) − ψ(ζ)| and |∂_z̄ f(rζ) − φ(ζ)| per r.

    The derivative trace is reported only where |rζ| stays below 1 − 1e-3.
    """
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    psi_vals = field.psi(theta)
    phi_vals = field.phi(theta)
    rows = []
    for r in r_sequence:
        r = validate_radius(r)
        points = r * np.exp(1j * theta)
        values = field.values_many(points)
        value_error = float(np.max(np.abs(values - psi_vals)))
        derivative_error = None
        if r < 1.0 - WIRTINGER_MARGIN - 1e-12:
            dzbar = np.array([field.wirtinger(p)[1] for p in points])
            derivative_error = float(np.max(np.abs(dzbar - phi_vals)))
        rows.append(TraceRow(r=r, value_error=value_error, derivative_error=derivative_error))
        logger.debug(f"Trace at r = {r}: value error {value_error:.3e}")
    return TraceReport(rows=rows)
