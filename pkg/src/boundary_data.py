"""
Boundary Data

Boundary functions φ, ψ on the unit circle, the polynomial source term g on
the closed disk, the φ₁ phase transform, sup-norms and empirical Lipschitz
seminorms on the circle (chordal metric).
"""

import logging
import math
from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

from .majorants import Majorant
from .reports import LipschitzReport, point_pair
from .utils.validators import DomainError, validate_exponent, validate_node_count

logger = logging.getLogger(__name__)

CIRCLE_SUP_SAMPLES = 2 ** 14
DISK_SUP_RADII = 256
DISK_SUP_ANGLES = 512
CUSP_SCALES = 256
CUSP_SCALE_RANGE = (1e-8, math.pi)


@dataclass(frozen=True)
class TrigPoly:
    """Σ c_k e^{ikt}, coefficients stored as sorted (k, c_k) pairs."""

    coeffs: Tuple[Tuple[int, complex], ...]

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, complex]) -> "TrigPoly":
        merged = {}
        for k, c in coeffs.items():
            merged[int(k)] = merged.get(int(k), 0j) + complex(c)
        return cls(tuple(sorted(merged.items())))

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def degree(self) -> int:
        return max((abs(k) for k, c in self.coeffs if c != 0), default=0)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for k, c in self.coeffs:
            out = out + c * np.exp(1j * k * t)
        return out


@dataclass(frozen=True)
class HoelderCusp:
    """ψ(e^{it}) = |e^{it} − e^{ia}|^β with β in (0, 1)."""

    beta: float
    anchor_t: float = 0.0

    def __post_init__(self):
        validate_exponent(self.beta, allow_one=False)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        chord = np.abs(np.exp(1j * t) - np.exp(1j * self.anchor_t))
        return np.power(chord, self.beta).astype(complex)


@dataclass(frozen=True)
class Scaled:
    factor: complex
    inner: "CircleFunction"

    def __call__(self, t):
        return self.factor * self.inner(t)


@dataclass(frozen=True)
class Sum:
    terms: Tuple["CircleFunction", ...]

    def __post_init__(self):
        if not self.terms:
            raise DomainError("Sum of boundary functions needs at least one term")

    def __call__(self, t):
        total = self.terms[0](t)
        for term in self.terms[1:]:
            total = total + term(t)
        return total


@dataclass(frozen=True)
class Modulated:
    """t ↦ f(e^{it})·e^{ikt}; non-trigonometric data keep this wrapped form."""

    inner: "CircleFunction"
    k: int

    def __call__(self, t):
        return self.inner(t) * np.exp(1j * self.k * np.asarray(t, dtype=float))


CircleFunction = Union[TrigPoly, HoelderCusp, Scaled, Sum, Modulated]


@dataclass(frozen=True)
class BivarPoly:
    """g(z) = Σ a_jk z^j conj(z)^k on the closed disk."""

    terms: Tuple[Tuple[Tuple[int, int], complex], ...]

    @classmethod
    def from_dict(cls, terms: Mapping[Tuple[int, int], complex]) -> "BivarPoly":
        merged = {}
        for (j, k), a in terms.items():
            if j < 0 or k < 0:
                raise DomainError(f"Monomial exponents must be nonnegative, got ({j}, {k})")
            key = (int(j), int(k))
            merged[key] = merged.get(key, 0j) + complex(a)
        return cls(tuple(sorted((key, a) for key, a in merged.items() if a != 0)))

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls(())

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((j + k for (j, k), _ in self.terms), default=0)

    def _matrix(self) -> np.ndarray:
        size = max((max(j, k) for (j, k), _ in self.terms), default=0) + 1
        c = np.zeros((size, size), dtype=complex)
        for (j, k), a in self.terms:
            c[j, k] += a
        return c

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.is_zero:
            return np.zeros(z.shape, dtype=complex)
        return npoly.polyval2d(z, np.conj(z), self._matrix())

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        merged = self.as_dict()
        for key, a in other.terms:
            merged[key] = merged.get(key, 0j) + a
        return BivarPoly.from_dict(merged)

    def scale(self, factor: complex) -> "BivarPoly":
        return BivarPoly.from_dict({key: factor * a for key, a in self.terms})

    def dz(self) -> "BivarPoly":
        return BivarPoly.from_dict({(j - 1, k): j * a for (j, k), a in self.terms if j > 0})

    def dzbar(self) -> "BivarPoly":
        return BivarPoly.from_dict({(j, k - 1): k * a for (j, k), a in self.terms if k > 0})

    def conjugate(self) -> "BivarPoly":
        """The polynomial z ↦ conj(g(z))."""
        return BivarPoly.from_dict({(k, j): np.conj(a) for (j, k), a in self.terms})

    def reflected(self) -> "BivarPoly":
        """The polynomial z ↦ conj(g(conj(z)))."""
        return BivarPoly.from_dict({(j, k): np.conj(a) for (j, k), a in self.terms})


DiskFunction = BivarPoly


def constant(c: complex) -> TrigPoly:
    """Constant boundary function c."""
    return TrigPoly.from_dict({0: c})


def eval_t(f: CircleFunction, t: float) -> complex:
    """Value of f at e^{it}."""
    return complex(f(np.asarray(t, dtype=float)))


def modulated(f: CircleFunction, k: int) -> CircleFunction:
    """
    Multiply a boundary function by e^{ikt}.

    Trigonometric polynomials are shifted index-wise; combinators distribute;
    everything else is wrapped.
    """
    if k == 0:
        return f
    if isinstance(f, TrigPoly):
        return TrigPoly(tuple((j + k, c) for j, c in f.coeffs))
    if isinstance(f, Scaled):
        return Scaled(f.factor, modulated(f.inner, k))
    if isinstance(f, Sum):
        return Sum(tuple(modulated(term, k) for term in f.terms))
    if isinstance(f, Modulated):
        return modulated(f.inner, f.k + k)
    return Modulated(f, k)


def to_phi1(phi: CircleFunction) -> CircleFunction:
    """φ₁(e^{it}) = φ(e^{it})·e^{−it}."""
    return modulated(phi, -1)


def anchors(f: CircleFunction) -> Tuple[float, ...]:
    """Angles of the Hölder cusps contained in f, reduced to [0, 2π)."""
    if isinstance(f, HoelderCusp):
        return (f.anchor_t % (2 * math.pi),)
    if isinstance(f, (Scaled, Modulated)):
        return anchors(f.inner)
    if isinstance(f, Sum):
        found = []
        for term in f.terms:
            found.extend(a for a in anchors(term) if a not in found)
        return tuple(found)
    return ()


def is_zero(f: CircleFunction) -> bool:
    """Structural test for the zero boundary function."""
    if isinstance(f, TrigPoly):
        return all(c == 0 for _, c in f.coeffs)
    if isinstance(f, Scaled):
        return f.factor == 0 or is_zero(f.inner)
    if isinstance(f, Sum):
        return all(is_zero(term) for term in f.terms)
    if isinstance(f, Modulated):
        return is_zero(f.inner)
    return False


def sup_norm(f: Union[CircleFunction, DiskFunction]) -> float:
    """
    Sampled sup-norm.

    Circle functions use 2^14 uniform angles plus cusp anchors and their
    antipodes; disk functions use a 256 x 512 polar grid including r = 1.
    """
    if isinstance(f, BivarPoly):
        if f.is_zero:
            return 0.0
        radii = np.linspace(0.0, 1.0, DISK_SUP_RADII)
        theta = 2 * np.pi * np.arange(DISK_SUP_ANGLES) / DISK_SUP_ANGLES
        grid = radii[:, None] * np.exp(1j * theta)[None, :]
        return float(np.max(np.abs(f(grid))))
    t = 2 * np.pi * np.arange(CIRCLE_SUP_SAMPLES) / CIRCLE_SUP_SAMPLES
    extra = [a for anchor in anchors(f) for a in (anchor, anchor + math.pi)]
    if extra:
        t = np.concatenate((t, extra))
    return float(np.max(np.abs(f(t))))


def circle_pairs(anchor_angles: Sequence[float], n_pairs: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Deterministic angle pairs for seminorm estimation.

    All pairs of N uniform angles with N(N−1)/2 >= n_pairs, plus 512 pairs per
    cusp anchor a: (a, a + s) and (a − s, a + s) for 256 geometric scales s.

    Returns:
        Arrays (t1, t2) of equal length
    """
    validate_node_count(n_pairs, 1, "n_pairs")
    n = max(2, math.ceil((1 + math.sqrt(1 + 8 * n_pairs)) / 2))
    grid = 2 * np.pi * np.arange(n) / n
    i, j = np.triu_indices(n, k=1)
    first, second = [grid[i]], [grid[j]]
    scales = np.geomspace(*CUSP_SCALE_RANGE, CUSP_SCALES)
    for a in anchor_angles:
        first.extend((np.full(CUSP_SCALES, a), a - scales))
        second.extend((a + scales, a + scales))
    return np.concatenate(first), np.concatenate(second)


def chord(t1, t2):
    """Chordal distance |e^{it1} − e^{it2}|."""
    return 2.0 * np.abs(np.sin((np.asarray(t1) - np.asarray(t2)) / 2.0))


def pair_ratios(f: CircleFunction, m: Majorant, t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """
    |f(e^{it1}) − f(e^{it2})| / ω(chord) for every pair.

    Coincident points give 0; ω(d) = 0 with a nonzero difference gives inf.
    """
    diff = np.abs(f(t1) - f(t2))
    d = chord(t1, t2)
    denom = m(d)
    ratios = np.zeros_like(diff)
    positive = denom > 0
    ratios[positive] = diff[positive] / denom[positive]
    ratios[~positive & (diff > 0)] = np.inf
    ratios[d == 0] = 0.0
    return ratios


def lipschitz_seminorm_circle(f: CircleFunction, m: Majorant, n_pairs: int = 20000) -> LipschitzReport:
    """
    Lower-bound estimate of ‖f‖_{L_ω(𝕋),s} by structured pair sampling.

    Args:
        f: Boundary function
        m: Majorant ω
        n_pairs: Minimum number of uniform-grid pairs

    Returns:
        LipschitzReport with the maximal ratio and its witness pair
    """
    t1, t2 = circle_pairs(anchors(f), n_pairs)
    ratios = pair_ratios(f, m, t1, t2)
    idx = int(np.argmax(ratios))
    max_ratio = float(ratios[idx])
    diverged = not math.isfinite(max_ratio)
    if diverged:
        logger.warning(f"Seminorm against {m.id} diverges at t = ({t1[idx]:.6g}, {t2[idx]:.6g})")
    return LipschitzReport(
        quantity="seminorm_circle",
        max_ratio=max_ratio,
        witness_pair=point_pair(np.exp(1j * t1[idx]), np.exp(1j * t2[idx])),
        pair_count=int(t1.size),
        majorants=(m.id,),
        diverged=diverged,
    )
