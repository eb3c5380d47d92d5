"""
Quadrature

Deterministic quadrature rules: the periodic trapezoid rule on the circle and
a polar Gauss-Legendre x trapezoid rule on the disk, with near-boundary
angular adaptivity and local radial refinement around a marked point.
"""

import logging
import math
from functools import lru_cache
from typing import Callable, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import roots_legendre

from .utils.validators import DomainError, QuadratureError, validate_node_count

logger = logging.getLogger(__name__)

MIN_BOUNDARY_GAP = 1e-6


class QuadratureSpec(BaseModel):
    """Quadrature parameters (run config key "quadrature")."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    n_theta_base: int = Field(
        default=256,
        description="Minimum number of angular nodes",
        ge=16
    )
    n_r: int = Field(
        default=64,
        description="Gauss-Legendre nodes per radial panel",
        ge=8
    )
    boundary_adaptivity_c: float = Field(
        default=16.0,
        description="n_theta(z) = max(n_theta_base, ceil(c/(1-|z|)))",
        gt=0
    )
    diagonal_refine: bool = Field(
        default=True,
        description="Split the radial panels around a marked point"
    )
    green_potential: Literal["polar", "exact"] = Field(
        default="polar",
        description="Green term by disk quadrature or in closed form for polynomial sources"
    )

    def n_theta(self, z: complex) -> int:
        """
        Number of circle nodes for an evaluation point z.

        Raises:
            DomainError: If 1 - |z| < 1e-6
        """
        gap = 1.0 - abs(z)
        if gap < MIN_BOUNDARY_GAP:
            raise DomainError(f"Point too close to the unit circle for circle quadrature: |z| = {abs(z):.17g}")
        return max(self.n_theta_base, math.ceil(self.boundary_adaptivity_c / gap))


@lru_cache(maxsize=256)
def circle_nodes(n: int, offset: float = 0.0) -> np.ndarray:
    """Read-only trapezoid nodes t_j = offset + 2πj/n."""
    validate_node_count(n, 2, "circle nodes")
    t = offset + 2.0 * np.pi * np.arange(n) / n
    t.setflags(write=False)
    return t


@lru_cache(maxsize=64)
def gauss_legendre_panels(breaks: Tuple[float, ...], n_r: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights over consecutive panels.

    Args:
        breaks: Increasing panel endpoints
        n_r: Nodes per panel

    Returns:
        Read-only (nodes, weights)
    """
    x, w = roots_legendre(n_r)
    nodes, weights = [], []
    for a, b in zip(breaks, breaks[1:]):
        half = 0.5 * (b - a)
        nodes.append(a + half * (x + 1.0))
        weights.append(half * w)
    nodes, weights = np.concatenate(nodes), np.concatenate(weights)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _check_finite(values: np.ndarray, abscissae: np.ndarray, label: str) -> None:
    bad = np.nonzero(~np.isfinite(values))[0]
    if bad.size:
        i = int(bad[0])
        raise QuadratureError(f"Non-finite {label} integrand value at node {i} ({abscissae.flat[i]})")


def circle_integral(integrand: Callable[[np.ndarray], np.ndarray], n: int, offset: float = 0.0) -> complex:
    """
    (1/2π)∫₀^{2π} integrand(t) dt by the n-node trapezoid rule.

    Exact for trigonometric polynomials of degree < n.

    Args:
        integrand: Vectorised function of the angle array
        n: Number of nodes (>= 2)
        offset: Rotation of the node set

    Raises:
        QuadratureError: If the integrand is not finite at some node
    """
    t = circle_nodes(n, offset)
    values = np.asarray(integrand(t), dtype=complex)
    _check_finite(values, t, "circle")
    return complex(values.mean())


class DiskRule:
    """Tensor polar rule on the unit disk; weights include the Jacobian r and 2π/n."""

    def __init__(self, spec: QuadratureSpec, marked: Optional[complex] = None):
        breaks = (0.0, 1.0)
        offset = 0.0
        if marked is not None:
            rho = abs(marked)
            offset = math.atan2(marked.imag, marked.real) if rho > 0 else 0.0
            if spec.diagonal_refine:
                candidates = (0.0, 0.5 * rho, rho, 0.5 * (1.0 + rho), 1.0)
                breaks = tuple(sorted(set(candidates)))
        radii, radial_weights = gauss_legendre_panels(breaks, spec.n_r)
        theta = circle_nodes(spec.n_theta_base, offset)
        self.points = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
        self.weights = np.repeat(radial_weights * radii * (2.0 * np.pi / theta.size), theta.size)
        self.breaks = breaks

    def integrate(self, integrand: Callable[[np.ndarray], np.ndarray]) -> complex:
        values = np.asarray(integrand(self.points), dtype=complex)
        _check_finite(values, self.points, "disk")
        return complex(np.dot(self.weights, values))


def disk_integral(integrand: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec,
                  marked: Optional[complex] = None) -> complex:
    """
    ∫_𝔻 integrand(w) dA(w) by the polar rule.

    With a marked point z (the logarithmic point of the Green kernel) the
    radial panels are split at |z|/2, |z| and (1+|z|)/2 and the angular
    nodes are rotated so that arg z is a node.
    """
    return DiskRule(spec, marked).integrate(integrand)