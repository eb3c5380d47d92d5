"""
Kernels

Closed-form kernels of the biharmonic representation formula on the unit
disk and their first-order Wirtinger derivatives. The angle argument t may
be a scalar or a numpy array; the disk argument of the Green function may be
an array as well.
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .utils.validators import validate_closed_disk_point, validate_interior_point

DIAGONAL_CUTOFF = 1e-8


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float

    @classmethod
    def from_polar(cls, r: float, theta: float) -> "ComplexPoint":
        z = r * complex(math.cos(theta), math.sin(theta))
        return cls(z.real, z.imag)

    @classmethod
    def of(cls, z: complex) -> "ComplexPoint":
        return cls(float(z.real), float(z.imag))

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    @property
    def r(self) -> float:
        return abs(self.as_complex())

    @property
    def theta(self) -> float:
        """arg z, with arg 0 = 0."""
        return math.atan2(self.im, self.re) if (self.re or self.im) else 0.0


PointLike = Union[ComplexPoint, complex, float]


def as_complex(z: PointLike) -> complex:
    return z.as_complex() if isinstance(z, ComplexPoint) else complex(z)


def _interior(z: PointLike) -> complex:
    return validate_interior_point(as_complex(z))


def _unit(t):
    return np.exp(1j * np.asarray(t, dtype=float))


def poisson(z: PointLike, t):
    """P(z, e^{it}) = (1 − |z|²)/|1 − z e^{−it}|²."""
    z = _interior(z)
    return (1.0 - abs(z) ** 2) / np.abs(1.0 - z * np.conj(_unit(t))) ** 2


def poisson_dz(z: PointLike, t):
    """∂_z P = e^{it}/(e^{it} − z)²."""
    z = _interior(z)
    e = _unit(t)
    return e / (e - z) ** 2


def poisson_dzbar(z: PointLike, t):
    """∂_z̄ P = e^{−it}/(e^{−it} − z̄)², the conjugate of ∂_z P."""
    return np.conj(poisson_dz(z, t))


def green_biharmonic(z: PointLike, w):
    """
    Biharmonic Green function of the disk.

    G(z, w) = |z − w|² log|(1 − z w̄)/(z − w)|² − (1 − |z|²)(1 − |w|²),
    with the diagonal limit −(1 − |z|²)² returned within 1e-8 of w = z.

    Args:
        z: Point of the closed disk
        w: Point or array of points of the closed disk

    Returns:
        Real value (float or ndarray shaped like w)
    """
    z = validate_closed_disk_point(as_complex(z))
    w_arr = np.asarray(w, dtype=complex)
    if w_arr.ndim == 0:
        validate_closed_disk_point(complex(w_arr))
    d2 = np.abs(z - w_arr) ** 2
    near = d2 <= DIAGONAL_CUTOFF ** 2
    safe_d2 = np.where(near, 1.0, d2)
    with np.errstate(divide='ignore', invalid='ignore'):
        log_term = safe_d2 * np.log(np.abs(1.0 - z * np.conj(w_arr)) ** 2 / safe_d2)
    value = np.where(near, 0.0, log_term) - (1.0 - abs(z) ** 2) * (1.0 - np.abs(w_arr) ** 2)
    value = np.where(near, -(1.0 - abs(z) ** 2) ** 2, value)
    return float(value) if value.ndim == 0 else value


def j1_kernel(z: PointLike, t):
    """1/|1 − z̄ e^{it}|², the weight of the J₁ integral."""
    z = _interior(z)
    return 1.0 / np.abs(1.0 - np.conj(z) * _unit(t)) ** 2


def q_kernel(z: PointLike, t):
    """z̄ e^{it} (1 − |z|²)/(1 − z̄ e^{it})², the kernel of Q[ψ]."""
    z = _interior(z)
    e = _unit(t)
    zb = np.conj(z)
    return zb * e * (1.0 - abs(z) ** 2) / (1.0 - zb * e) ** 2


def q_kernel_dz(z: PointLike, t):
    """∂_z of the Q kernel: −z̄² e^{it}/(1 − z̄ e^{it})²."""
    z = _interior(z)
    e = _unit(t)
    zb = np.conj(z)
    return -(zb ** 2) * e / (1.0 - zb * e) ** 2


def q_kernel_dzbar(z: PointLike, t):
    """
    ∂_z̄ of the Q kernel:
    −|z|² e^{it}/(1 − z̄ e^{it})² + (1 − |z|²) e^{it} (1 + z̄ e^{it})/(1 − z̄ e^{it})³.
    """
    z = _interior(z)
    e = _unit(t)
    zb = np.conj(z)
    r2 = abs(z) ** 2
    denom = 1.0 - zb * e
    return -r2 * e / denom ** 2 + (1.0 - r2) * e * (1.0 + zb * e) / denom ** 3


T_KERNELS = {
    "poisson": poisson,
    "poisson_dz": poisson_dz,
    "poisson_dzbar": poisson_dzbar,
    "q": q_kernel,
    "q_dz": q_kernel_dz,
    "q_dzbar": q_kernel_dzbar,
}

W_KERNELS = {
    "green": green_biharmonic,
}
