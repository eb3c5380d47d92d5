"""
Majorant Functions

Moduli of continuity ω (ω(0) = 0, non-decreasing, ω(t)/t non-increasing) and
numerical decision of the fast, slow and Hardy-Littlewood integral conditions.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate

from .utils.validators import DomainError, validate_exponent, validate_node_count, validate_positive

logger = logging.getLogger(__name__)

DIVERGENCE_THRESHOLD = 1e3
POINTS_PER_DECADE = 200
SCAN_DECADES = 24
QUAD_TOLERANCE = 1e-10
VALIDATION_FLOOR = 1e-8
VALIDATION_CEILING = 1e3
SCALE_FACTORS = (1.5, 2.0, 4.0, 10.0)


@dataclass(frozen=True)
class PowerLaw:
    """ω(t) = t^β with β in (0, 1]."""

    beta: float

    def __post_init__(self):
        validate_exponent(self.beta, allow_one=True)

    @property
    def id(self) -> str:
        return f"power({self.beta:g})"

    @property
    def t_max(self) -> Optional[float]:
        return None

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return ()

    def __call__(self, t):
        return np.power(np.asarray(t, dtype=float), self.beta)

    def integral_over_t(self, a, b):
        """∫_a^b t^(β-1) dt, vectorised over a and b."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        return (np.power(b, self.beta) - np.power(a, self.beta)) / self.beta

    def integral_over_t2(self, a, b):
        """∫_a^b t^(β-2) dt, vectorised over a and b."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if self.beta == 1.0:
            return np.log(b / a)
        return (np.power(a, self.beta - 1.0) - np.power(b, self.beta - 1.0)) / (1.0 - self.beta)

    def head_integral(self, eps: float) -> float:
        """∫_0^eps ω(t)/t dt = eps^β/β."""
        return eps ** self.beta / self.beta

    def tail_integral(self, t_cut: float) -> float:
        """∫_t_cut^∞ ω(t)/t² dt; infinite for β = 1."""
        if self.beta == 1.0:
            return math.inf
        return t_cut ** (self.beta - 1.0) / (1.0 - self.beta)


@dataclass(frozen=True)
class Tabulated:
    """
    Piecewise-linear majorant through (0, 0) and the knots (t_i, ω_i),
    extended by the constant ω(t_max) beyond the last knot.
    """

    knots: Tuple[float, ...]
    values: Tuple[float, ...]

    def __post_init__(self):
        if len(self.knots) == 0 or len(self.knots) != len(self.values):
            raise DomainError("Tabulated majorant needs matching, non-empty knots and values")
        if any(t <= 0 for t in self.knots):
            raise DomainError(f"Knot abscissae must be positive, got {self.knots}")
        if any(b <= a for a, b in zip(self.knots, self.knots[1:])):
            raise DomainError(f"Knot abscissae must be strictly increasing, got {self.knots}")
        if any(not (v > 0) for v in self.values):
            raise DomainError(f"Knot values must be positive, got {self.values}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "Tabulated":
        return cls(tuple(float(p[0]) for p in pairs), tuple(float(p[1]) for p in pairs))

    @property
    def id(self) -> str:
        return f"tabulated(n={len(self.knots)})"

    @property
    def t_max(self) -> float:
        return self.knots[-1]

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return self.knots

    @property
    def head_slope(self) -> float:
        return self.values[0] / self.knots[0]

    def __call__(self, t):
        xp = np.concatenate(([0.0], self.knots))
        fp = np.concatenate(([0.0], self.values))
        return np.interp(np.asarray(t, dtype=float), xp, fp)

    def _cell(self, a: float, b: float, power: int) -> float:
        t1, tmax = self.knots[0], self.knots[-1]
        if b <= t1:
            s = self.head_slope
            return s * (b - a) if power == 1 else s * math.log(b / a)
        if a >= tmax:
            c = self.values[-1]
            return c * math.log(b / a) if power == 1 else c * (1.0 / a - 1.0 / b)
        inner = [k for k in self.knots if a < k < b]
        value, _ = integrate.quad(
            lambda t: float(self(t)) / t ** power, a, b,
            epsabs=QUAD_TOLERANCE, epsrel=1e-12, points=inner or None, limit=200,
        )
        return value

    def integral_over_t(self, a, b):
        return np.vectorize(lambda x, y: self._cell(x, y, 1), otypes=[float])(a, b)

    def integral_over_t2(self, a, b):
        return np.vectorize(lambda x, y: self._cell(x, y, 2), otypes=[float])(a, b)

    def head_integral(self, eps: float) -> float:
        t1 = self.knots[0]
        if eps <= t1:
            return self.head_slope * eps
        return self.head_slope * t1 + float(self.integral_over_t(t1, eps))

    def tail_integral(self, t_cut: float) -> float:
        """Constant extension: ∫_t_cut^∞ C/t² dt = C/t_cut (t_cut >= t_max)."""
        return self.values[-1] / t_cut


Majorant = Union[PowerLaw, Tabulated]


class ScanGrid(BaseModel):
    """Description of a geometric scan grid."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    min: float
    max: float
    points: int


class ConditionReport(BaseModel):
    """Empirical constant M of a majorant integral condition."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    condition: Literal["fast", "slow", "hardy_littlewood"]
    majorant: str
    sup_ratio: float = Field(..., ge=0.0, description="Best empirical constant M on the grid")
    witness: float = Field(..., description="Argument attaining the sup on the scan grid")
    limit_estimate: float = Field(..., description="Extrapolated limit of the ratio at the bottom of the grid")
    diverged: bool
    threshold: float = DIVERGENCE_THRESHOLD
    grid: ScanGrid

    @property
    def passed(self) -> bool:
        return not self.diverged

    def to_json_dict(self) -> dict:
        data = self.model_dump()
        data["pass"] = self.passed
        return data


class MajorantValidation(BaseModel):
    """Outcome of validate(): the first violated property, if any."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    valid: bool
    violated: Optional[str] = None
    location: Optional[float] = None
    message: str = "all majorant properties hold on the sample grid"


def majorant_id(m: Majorant) -> str:
    """Stable identifier of a majorant for reports."""
    return m.id


def evaluate(m: Majorant, t):
    """
    Evaluate ω(t).

    Args:
        m: Majorant
        t: Nonnegative scalar or array

    Returns:
        ω(t) as float (scalar input) or ndarray

    Raises:
        DomainError: If any t is negative
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError(f"Majorant argument must be nonnegative, got {t}")
    value = m(arr)
    return float(value) if np.ndim(value) == 0 else value


def validate(m: Majorant, n_samples: int = 2000) -> MajorantValidation:
    """
    Check the majorant properties on a geometric sample grid.

    The grid spans [1e-8, t_max] for tabulated majorants (knots included)
    and [1e-8, 1e3] otherwise. Never raises for well-formed majorants.
    """
    validate_node_count(n_samples, 2, "n_samples")
    upper = m.t_max if m.t_max is not None else VALIDATION_CEILING
    grid = np.geomspace(VALIDATION_FLOOR, upper, n_samples)
    if m.breakpoints:
        grid = np.union1d(grid, np.asarray(m.breakpoints))
    values = m(grid)

    if float(m(0.0)) != 0.0:
        return MajorantValidation(valid=False, violated="zero_at_origin", location=0.0,
                                  message=f"ω(0) = {float(m(0.0))} != 0")

    drops = np.nonzero(np.diff(values) < -1e-12 * np.abs(values[:-1]))[0]
    if drops.size:
        t = float(grid[drops[0] + 1])
        return MajorantValidation(valid=False, violated="non_decreasing", location=t,
                                  message=f"ω decreases at t = {t:.6g}")

    ratio = values / grid
    rises = np.nonzero(np.diff(ratio) > 1e-12 * ratio[:-1])[0]
    if rises.size:
        t = float(grid[rises[0] + 1])
        return MajorantValidation(valid=False, violated="ratio_non_increasing", location=t,
                                  message=f"ω(t)/t increases at t = {t:.6g}")

    for c in SCALE_FACTORS:
        scaled = m(c * grid)
        bad = np.nonzero(scaled > c * values + 1e-12 * values)[0]
        if bad.size:
            t = float(grid[bad[0]])
            return MajorantValidation(valid=False, violated="sub_scaling", location=t,
                                      message=f"ω({c:g}t) > {c:g}ω(t) at t = {t:.6g}")

    return MajorantValidation(valid=True)


def scan_grid(top: float, points_per_decade: int = POINTS_PER_DECADE,
              decades: int = SCAN_DECADES) -> np.ndarray:
    """
    Descending geometric grid top·10^(-i/ppd), i = 0..decades·ppd.

    Doubling points_per_decade yields a superset of the coarser grid.
    """
    exponents = np.arange(decades * points_per_decade + 1) / points_per_decade
    return top * np.power(10.0, -exponents)


def _limit_estimate(ratios: np.ndarray, points_per_decade: int) -> float:
    """Geometric extrapolation of the ratio trend over the last two decades."""
    if ratios.size < 2 * points_per_decade + 1:
        return float(ratios[-1])
    r0, r1, r2 = ratios[-1 - 2 * points_per_decade], ratios[-1 - points_per_decade], ratios[-1]
    d1, d2 = r1 - r0, r2 - r1
    if abs(d2) <= 1e-12 * max(1.0, abs(r2)) or d1 <= 0 or d2 < 0:
        return float(r2)
    rho = d2 / d1
    if rho >= 1.0 - 1e-6:
        return math.inf
    return float(r2 + d2 * rho / (1.0 - rho))


def _report(condition: str, m: Majorant, grid: np.ndarray, ratios: np.ndarray,
            points_per_decade: int, threshold: float, forced_divergence: bool = False) -> ConditionReport:
    finite = np.where(np.isfinite(ratios), ratios, math.inf)
    idx = int(np.argmax(finite))
    sup_ratio = float(finite[idx])
    limit = math.inf if forced_divergence else _limit_estimate(finite, points_per_decade)
    diverged = forced_divergence or sup_ratio > threshold or limit > threshold
    if diverged:
        logger.warning(f"{condition} condition diverges for {m.id} (sup {sup_ratio:.6g}, limit {limit:.6g})")
    else:
        logger.debug(f"{condition} condition holds for {m.id} with M ~ {sup_ratio:.6g}")
    return ConditionReport(
        condition=condition,
        majorant=m.id,
        sup_ratio=sup_ratio,
        witness=float(grid[idx]),
        limit_estimate=limit,
        diverged=diverged,
        threshold=threshold,
        grid=ScanGrid(min=float(grid[-1]), max=float(grid[0]), points=int(grid.size)),
    )


def check_fast(m: Majorant, nu0: float = 1.0, points_per_decade: int = POINTS_PER_DECADE,
               threshold: float = DIVERGENCE_THRESHOLD) -> ConditionReport:
    """
    Fast condition: sup over ν in (0, ν0] of (∫_0^ν ω(t)/t dt) / ω(ν).

    The integral below the grid bottom is taken in closed form; the grid
    cells are accumulated upward.
    """
    validate_positive(nu0, "nu0")
    grid = scan_grid(nu0, points_per_decade)
    head = m.head_integral(float(grid[-1]))
    if not math.isfinite(head):
        return _report("fast", m, grid, np.full(grid.size, math.inf), points_per_decade,
                       threshold, forced_divergence=True)
    cells = m.integral_over_t(grid[1:], grid[:-1])
    # F[i] = head + sum of cells below grid[i]
    below = np.concatenate((np.cumsum(cells[::-1])[::-1], [0.0]))
    integrals = head + below
    ratios = integrals / m(grid)
    return _report("fast", m, grid, ratios, points_per_decade, threshold)


def check_slow(m: Majorant, nu0: float = 1.0, points_per_decade: int = POINTS_PER_DECADE,
               threshold: float = DIVERGENCE_THRESHOLD) -> ConditionReport:
    """
    Slow condition: sup over ν in (0, ν0] of ν·(∫_ν^∞ ω(t)/t² dt) / ω(ν).

    The tail beyond t_cut = max(ν0, t_max) is taken in closed form.
    """
    validate_positive(nu0, "nu0")
    grid = scan_grid(nu0, points_per_decade)
    t_cut = max(nu0, m.t_max or nu0)
    tail = m.tail_integral(t_cut)
    if not math.isfinite(tail):
        return _report("slow", m, grid, np.full(grid.size, math.inf), points_per_decade,
                       threshold, forced_divergence=True)
    if t_cut > nu0:
        tail += float(m.integral_over_t2(nu0, t_cut))
    cells = m.integral_over_t2(grid[1:], grid[:-1])
    above = np.concatenate(([0.0], np.cumsum(cells)))
    ratios = grid * (tail + above) / m(grid)
    return _report("slow", m, grid, ratios, points_per_decade, threshold)


def check_hardy_littlewood(m: Majorant, points_per_decade: int = POINTS_PER_DECADE,
                           threshold: float = DIVERGENCE_THRESHOLD) -> ConditionReport:
    """
    Hardy-Littlewood condition: sup over λ in (0, π] of λ·(∫_λ^π ω(t)/t² dt) / ω(λ).

    The grid reaches λ = π·1e-24; logarithmic growth is caught by the
    extrapolated limit.
    """
    grid = scan_grid(math.pi, points_per_decade)
    cells = m.integral_over_t2(grid[1:], grid[:-1])
    above = np.concatenate(([0.0], np.cumsum(cells)))
    ratios = grid * above / m(grid)
    return _report("hardy_littlewood", m, grid, ratios, points_per_decade, threshold)


def is_regular(m: Majorant, nu0: float = 1.0) -> bool:
    """A majorant is regular when it is both fast and slow."""
    return check_fast(m, nu0).passed and check_slow(m, nu0).passed
