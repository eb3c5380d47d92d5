"""
Verification Harness

Numerical certification of the lemma-level bounds and the Lipschitz
conclusions for the biharmonic representation:

- J₁ probes and sweeps, with and without the explicit constants
- Q-operator sweeps (sup, Λ, radial and equimodular differences)
- closed-form Λ bounds for the J₂ and J₃ terms
- modulus-of-continuity reports over sampled point pairs
- the φ ↔ φ₁ seminorm equivalence

"Bounded by some constant" claims are checked as refinement stability: the
maximum at level L+1 may exceed the maximum at level L (L >= 2) by at most
the growth budget.
"""

import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import qmc

from .boundary_data import (
    BivarPoly,
    CircleFunction,
    DiskFunction,
    anchors,
    circle_pairs,
    constant,
    eval_t,
    lipschitz_seminorm_circle,
    pair_ratios,
    sup_norm,
    to_phi1,
)
from .kernels import j1_kernel, q_kernel, q_kernel_dz, q_kernel_dzbar
from .majorants import ConditionReport, Majorant, check_hardy_littlewood
from .quadrature import QuadratureSpec, circle_integral, circle_nodes
from .reports import DEFAULT_GROWTH_BUDGET, LipschitzReport, SweepReport, is_refinement_stable, point_pair
from .solver import SolutionField, poisson_extension, q_transform, q_transform_derivatives
from .utils.parallel import ordered_map
from .utils.validators import DomainError, validate_node_count, validate_radius

logger = logging.getLogger(__name__)

DEFAULT_LEVELS = 3
MAX_LEVELS = 4
DEFAULT_PAIRS = 20000
PAIR_FACTORS = (0.25, 0.5, 1.0, 2.0, 4.0)
CUSP_OFFSETS = tuple(2.0 ** (j / 2.0) for j in range(-4, 5))
K_MIN, K_MAX = 4, 40
BOUNDARY_SCALE = 2.0 ** -10
LAMBDA_MARGIN = 1e-3
J2_TOLERANCE = 1e-6
J3_TOLERANCE = 1e-3
DOMINATION_TOLERANCE = 1e-9
PAIR_CHUNK = 256

Cell = Tuple[float, float]


# ---------------------------------------------------------------------------
# Sweep grids
# ---------------------------------------------------------------------------

def _check_levels(levels: int) -> int:
    validate_node_count(levels, 2, "levels")
    if levels > MAX_LEVELS:
        raise DomainError(f"levels must be at most {MAX_LEVELS}, got {levels}")
    return levels


def sweep_radii(level: int) -> np.ndarray:
    """
    Radii r = 1 − 2^{−k/4} for k = 4 … 40 in steps of 2^{2−level}.

    Every level spans 1/2 <= r <= 1 − 2^{−10}; each level halves the step in
    k, so its radii contain those of the level below.
    """
    step = 2.0 ** (2 - level)
    k = K_MIN + step * np.arange(int(round((K_MAX - K_MIN) / step)) + 1)
    return 1.0 - np.power(2.0, -k / 4.0)


def sweep_angles(level: int, r: float, anchor_angles: Sequence[float]) -> np.ndarray:
    """8·2^level uniform angles plus anchor ± (1 − r)·2^{j/2}, j = −4 … 4."""
    n = 8 * 2 ** level
    parts = [2.0 * np.pi * np.arange(n) / n]
    for a in anchor_angles:
        offsets = (1.0 - r) * np.asarray(CUSP_OFFSETS)
        parts.extend((a + offsets, a - offsets))
    return np.concatenate(parts)


def sweep_cells(level: int, anchor_angles: Sequence[float]) -> List[Cell]:
    """(r, θ) cells of one refinement level."""
    return [
        (float(r), float(theta))
        for r in sweep_radii(level)
        for theta in sweep_angles(level, r, anchor_angles)
    ]


def lambda_grid(anchor_angles: Sequence[float], level: int = 2, n_angles: int = 32) -> List[complex]:
    """Points for closed-form Λ checks: sweep radii with 1 − r >= 1e-3, and 0."""
    points = [0j]
    for r in sweep_radii(level):
        if 1.0 - r < LAMBDA_MARGIN:
            continue
        theta = np.concatenate((2.0 * np.pi * np.arange(n_angles) / n_angles, np.asarray(anchor_angles, dtype=float)))
        points.extend(complex(v) for v in r * np.exp(1j * theta))
    return points


def modulus_points(level: int, anchor_angles: Sequence[float], seed: int = 0) -> np.ndarray:
    """
    Interior pair-sampling points of one level.

    Scrambled Sobol points (2^{6+level}) inside the largest sweep radius plus
    every (r, θ) sweep cell; equimodular and radial pairs arise among them.
    """
    radii = sweep_radii(level)
    sample = qmc.Sobol(d=2, scramble=True, seed=seed).random_base2(m=6 + level)
    interior = np.sqrt(sample[:, 0]) * radii[-1] * np.exp(2j * np.pi * sample[:, 1])
    cells = np.array([r * np.exp(1j * theta) for r, theta in sweep_cells(level, anchor_angles)])
    return np.unique(np.concatenate((interior, cells)))


def boundary_angles(level: int, anchor_angles: Sequence[float]) -> np.ndarray:
    """
    Circle angles of one level: 8·2^level uniform angles, the anchors, and
    anchor ± 2^{−10−2·level}·2^{j/2}, j = −4 … 4.

    Anchor spacing starts below the boundary distance of the outermost sweep
    radius and shrinks fourfold per level.
    """
    n = 8 * 2 ** level
    parts = [2.0 * np.pi * np.arange(n) / n, np.asarray(anchor_angles, dtype=float)]
    offsets = BOUNDARY_SCALE * 4.0 ** -level * np.asarray(CUSP_OFFSETS)
    for a in anchor_angles:
        parts.extend((a + offsets, a - offsets))
    return np.unique(np.mod(np.concatenate(parts), 2.0 * np.pi))


def _polar(z: complex) -> Dict[str, float]:
    return {"r": abs(z), "theta": math.atan2(z.imag, z.real) if z else 0.0}


# ---------------------------------------------------------------------------
# Shared drivers
# ---------------------------------------------------------------------------

def _seminorm(psi: CircleFunction, omega: Majorant, n_pairs: int) -> Tuple[float, LipschitzReport]:
    report = lipschitz_seminorm_circle(psi, omega, n_pairs)
    return report.max_ratio, report


def _normalisation_guard(quantity: str, s: float, omega: Majorant) -> Optional[SweepReport]:
    """Skip report for constant data, failure report for data outside L_ω."""
    if s == 0.0:
        logger.warning(f"{quantity}: boundary data has zero seminorm, sweep skipped")
        return SweepReport.skip(quantity, "zero seminorm (constant boundary data)")
    if not math.isfinite(s):
        logger.error(f"{quantity}: boundary data is not in L_ω for {omega.id}")
        return SweepReport(quantity=quantity, max=math.inf, passed=False,
                           details={"reason": f"seminorm diverges for {omega.id}"})
    return None


def _cell_max(values: Sequence[float]) -> Tuple[float, int]:
    arr = np.asarray(values, dtype=float)
    arr = np.where(np.isnan(arr), np.inf, arr)
    idx = int(np.argmax(arr))
    return float(arr[idx]), idx


def _stability_report(quantity: str, per_level: Callable[[int], Tuple[float, Dict]], levels: int,
                      growth_budget: float, details: Optional[Dict] = None) -> SweepReport:
    trend: List[Tuple[int, float]] = []
    best, best_arg = -1.0, {}
    for level in range(1, levels + 1):
        value, arg = per_level(level)
        trend.append((level, value))
        logger.debug(f"{quantity}: level {level} max {value:.6g}")
        if value > best:
            best, best_arg = value, arg
    passed = is_refinement_stable(trend, growth_budget)
    log = logger.info if passed else logger.error
    log(f"{quantity}: max {best:.6g}, trend {[round(v, 6) for _, v in trend]}, {'stable' if passed else 'UNSTABLE'}")
    return SweepReport(quantity=quantity, max=best, argmax=best_arg, passed=passed,
                       trend=trend, details=details or {})


def _bound_report(quantity: str, value: float, arg: Dict, bound: float, tolerance: float,
                  details: Optional[Dict] = None) -> SweepReport:
    passed = value <= bound * (1.0 + tolerance) + 1e-300
    log = logger.info if passed else logger.error
    log(f"{quantity}: max {value:.6g} against bound {bound:.6g} ({'pass' if passed else 'FAIL'})")
    return SweepReport(quantity=quantity, max=value, argmax=arg, bound=bound, passed=passed,
                       details=details or {})


# ---------------------------------------------------------------------------
# J₁
# ---------------------------------------------------------------------------

def j1_probe(psi: CircleFunction, omega2: Optional[Majorant], r: float, theta: float,
             spec: QuadratureSpec) -> float:
    """
    J₁(re^{iθ}) = (1/2π)∫ |ψ(e^{it}) − ψ(e^{iθ})| / |1 − z̄ e^{it}|² dt.

    When omega2 is given the value normalised by ω₂(1 − r)/(1 − r) is logged.
    """
    r = validate_radius(r)
    z = r * complex(math.cos(theta), math.sin(theta))
    base = eval_t(psi, theta)
    value = circle_integral(lambda t: np.abs(psi(t) - base) * j1_kernel(z, t), spec.n_theta(z)).real
    if omega2 is not None and r > 0:
        logger.debug(f"J1({r}, {theta}) = {value:.6g}, scaled {value * (1 - r) / float(omega2(1 - r)):.6g}")
    return value


def lemma_sweep_j1(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                   levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                   n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """Refinement stability of J₁(z)(1 − r)/(‖ψ‖·ω₂(1 − r)) for r in [0.5, 1)."""
    quantity = "j1_scaled"
    levels = _check_levels(levels)
    s, _ = _seminorm(psi, omega2, n_pairs)
    guard = _normalisation_guard(quantity, s, omega2)
    if guard:
        return guard
    cusp = anchors(psi)

    def per_level(level: int):
        cells = sweep_cells(level, cusp)
        values = ordered_map(
            lambda c: j1_probe(psi, None, c[0], c[1], spec) * (1 - c[0]) / (s * float(omega2(1 - c[0]))),
            cells,
        )
        value, idx = _cell_max(values)
        return value, {"r": cells[idx][0], "theta": cells[idx][1]}

    return _stability_report(quantity, per_level, levels, growth_budget, {"seminorm": s})


def j1_explicit_check(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                      levels: int = DEFAULT_LEVELS, n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """
    J₁ against the explicit constants of its bound.

    J₁ <= s(1/π + (π/2)M)ω₂(1 − r)/(1 − r) for r >= 1/2, with M the
    Hardy-Littlewood constant of ω₂, and J₁ <= s·ω₂(2)/(1 − r)² for r <= 1/2.
    """
    quantity = "j1_explicit"
    levels = _check_levels(levels)
    s, _ = _seminorm(psi, omega2, n_pairs)
    guard = _normalisation_guard(quantity, s, omega2)
    if guard:
        return guard
    hl = check_hardy_littlewood(omega2)
    if hl.diverged:
        logger.warning(f"{quantity}: {omega2.id} fails the Hardy-Littlewood condition, check skipped")
        return SweepReport.skip(quantity, f"{omega2.id} fails the Hardy-Littlewood condition")
    cusp = anchors(psi)
    near = 1.0 / math.pi + 0.5 * math.pi * hl.sup_ratio
    cells = [(r, theta) for r in (0.0, 0.125, 0.25, 0.375) for theta in sweep_angles(1, 0.5, cusp)]
    cells += sweep_cells(levels, cusp)

    def normalised(cell: Cell) -> float:
        r, theta = cell
        if r >= 0.5:
            bound = s * near * float(omega2(1 - r)) / (1 - r)
        else:
            bound = s * float(omega2(2.0)) / (1 - r) ** 2
        return j1_probe(psi, None, r, theta, spec) / bound

    value, idx = _cell_max(ordered_map(normalised, cells))
    return _bound_report(quantity, value, {"r": cells[idx][0], "theta": cells[idx][1]}, 1.0, 0.0,
                         {"seminorm": s, "hardy_littlewood_constant": hl.sup_ratio})


def q_domination_check(psi: CircleFunction, spec: QuadratureSpec, levels: int = DEFAULT_LEVELS) -> SweepReport:
    """
    Pointwise dominations of Q by J₁ on identical nodes:
    |Q| <= (1 − r²)J₁, |∂_z Q| <= r²J₁, |∂_z̄ Q| <= (r² + (1 + r)²)J₁.
    """
    quantity = "q_domination"
    levels = _check_levels(levels)
    cells = sweep_cells(levels, anchors(psi))

    def normalised(cell: Cell) -> float:
        r, theta = cell
        z = r * complex(math.cos(theta), math.sin(theta))
        t = circle_nodes(spec.n_theta(z))
        diff = psi(t) - eval_t(psi, theta)
        j1 = float(np.mean(np.abs(diff) * j1_kernel(z, t)))
        if j1 == 0.0:
            return 0.0
        q = abs(np.mean(q_kernel(z, t) * diff))
        qz = abs(np.mean(q_kernel_dz(z, t) * diff))
        qzbar = abs(np.mean(q_kernel_dzbar(z, t) * diff))
        return max(q / ((1 - r * r) * j1), qz / (r * r * j1), qzbar / ((r * r + (1 + r) ** 2) * j1))

    value, idx = _cell_max(ordered_map(normalised, cells))
    return _bound_report(quantity, value, {"r": cells[idx][0], "theta": cells[idx][1]}, 1.0, DOMINATION_TOLERANCE)


# ---------------------------------------------------------------------------
# Q-operator sweeps
# ---------------------------------------------------------------------------

def _q_cached(psi: CircleFunction, spec: QuadratureSpec) -> Callable[[complex], complex]:
    cache: Dict[complex, complex] = {}

    def q(z: complex) -> complex:
        if z not in cache:
            cache[z] = q_transform(psi, z, spec)
        return cache[z]

    return q


def lemma_sweep_q_sup(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                      levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                      n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """Refinement stability of |Q[ψ](rξ)|/(‖ψ‖·ω₂(1 − r))."""
    quantity = "q_sup"
    levels = _check_levels(levels)
    s, _ = _seminorm(psi, omega2, n_pairs)
    guard = _normalisation_guard(quantity, s, omega2)
    if guard:
        return guard
    cusp = anchors(psi)

    def per_level(level: int):
        cells = sweep_cells(level, cusp)

        def normalised(cell: Cell) -> float:
            r, theta = cell
            z = r * complex(math.cos(theta), math.sin(theta))
            return abs(q_transform(psi, z, spec)) / (s * float(omega2(1 - r)))

        value, idx = _cell_max(ordered_map(normalised, cells))
        return value, {"r": cells[idx][0], "theta": cells[idx][1]}

    return _stability_report(quantity, per_level, levels, growth_budget, {"seminorm": s})


def lemma_sweep_q_lambda(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                         levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                         n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """Refinement stability of Λ_{Q[ψ]}(z)(1 − r)/(‖ψ‖·ω₂(1 − r))."""
    quantity = "q_lambda"
    levels = _check_levels(levels)
    s, _ = _seminorm(psi, omega2, n_pairs)
    guard = _normalisation_guard(quantity, s, omega2)
    if guard:
        return guard
    cusp = anchors(psi)

    def per_level(level: int):
        cells = sweep_cells(level, cusp)

        def normalised(cell: Cell) -> float:
            r, theta = cell
            z = r * complex(math.cos(theta), math.sin(theta))
            dz, dzbar = q_transform_derivatives(psi, z, spec)
            return (abs(dz) + abs(dzbar)) * (1 - r) / (s * float(omega2(1 - r)))

        value, idx = _cell_max(ordered_map(normalised, cells))
        return value, {"r": cells[idx][0], "theta": cells[idx][1]}

    return _stability_report(quantity, per_level, levels, growth_budget, {"seminorm": s})


def _pair_sweep(quantity: str, psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                pairs_for_level: Callable[[int], List[Tuple[complex, complex]]], levels: int,
                growth_budget: float, n_pairs: int) -> SweepReport:
    s, _ = _seminorm(psi, omega2, n_pairs)
    guard = _normalisation_guard(quantity, s, omega2)
    if guard:
        return guard
    q = _q_cached(psi, spec)

    def per_level(level: int):
        pairs = pairs_for_level(level)
        ordered_map(q, sorted({z for pair in pairs for z in pair}, key=lambda z: (z.real, z.imag)))

        def normalised(pair: Tuple[complex, complex]) -> float:
            z1, z2 = pair
            d = abs(z1 - z2)
            return abs(q(z1) - q(z2)) / (s * float(omega2(d))) if d > 0 else 0.0

        values = [normalised(pair) for pair in pairs]
        value, idx = _cell_max(values)
        return value, {"pair": [list(p) for p in point_pair(*pairs[idx])]}

    return _stability_report(quantity, per_level, levels, growth_budget, {"seminorm": s})


def lemma_sweep_q_radial(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                         levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                         n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """
    Refinement stability of |Q[ψ](r₁ξ) − Q[ψ](r₂ξ)|/(‖ψ‖·ω₂(r₁ − r₂)).

    r₁ − r₂ runs over (1 − r₁)·{1/4, 1/2, 1, 2, 4}, covering both
    1 − r₁ <= r₁ − r₂ and its complement.
    """
    levels = _check_levels(levels)
    cusp = anchors(psi)

    def pairs_for_level(level: int):
        n = 8 * 2 ** level
        xis = np.concatenate((2.0 * np.pi * np.arange(n) / n, np.asarray(cusp, dtype=float)))
        pairs = []
        for r1 in sweep_radii(level):
            for factor in PAIR_FACTORS:
                r2 = r1 - factor * (1.0 - r1)
                if r2 < 0:
                    continue
                for xi in xis:
                    e = complex(math.cos(xi), math.sin(xi))
                    pairs.append((complex(r1 * e), complex(r2 * e)))
        return pairs

    return _pair_sweep("q_radial", psi, omega2, spec, pairs_for_level, levels, growth_budget, n_pairs)


def lemma_sweep_q_equimodular(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                              levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                              n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """
    Refinement stability of |Q[ψ](z₁) − Q[ψ](z₂)|/(‖ψ‖·ω₂(|z₁ − z₂|)) for |z₁| = |z₂|.

    Chords run over (1 − r)·{1/4, 1/2, 1, 2, 4} in both angular directions.
    """
    levels = _check_levels(levels)
    cusp = anchors(psi)

    def pairs_for_level(level: int):
        n = 8 * 2 ** level
        thetas = np.concatenate((2.0 * np.pi * np.arange(n) / n, np.asarray(cusp, dtype=float)))
        pairs = []
        for r in sweep_radii(level):
            for factor in PAIR_FACTORS:
                d = factor * (1.0 - r)
                if d >= 2.0 * r:
                    continue
                delta = 2.0 * math.asin(d / (2.0 * r))
                for theta in thetas:
                    z1 = r * complex(math.cos(theta), math.sin(theta))
                    for sign in (1.0, -1.0):
                        angle = theta + sign * delta
                        pairs.append((z1, r * complex(math.cos(angle), math.sin(angle))))
        return pairs

    return _pair_sweep("q_equimodular", psi, omega2, spec, pairs_for_level, levels, growth_budget, n_pairs)


# ---------------------------------------------------------------------------
# Closed-form Λ bounds
# ---------------------------------------------------------------------------

def j2_lambda_check(phi: CircleFunction, z_grid: Optional[Sequence[complex]], spec: QuadratureSpec) -> SweepReport:
    """max Λ_{J₂} over the grid against 4‖φ‖_∞."""
    quantity = "j2_lambda"
    grid = list(z_grid) if z_grid is not None else lambda_grid(anchors(phi))
    field = SolutionField(phi, constant(0.0), BivarPoly.zero(), spec)

    def lam(z: complex) -> float:
        dz, dzbar = field.j2_derivatives(z)
        return abs(dz) + abs(dzbar)

    value, idx = _cell_max(ordered_map(lam, grid))
    return _bound_report(quantity, value, _polar(grid[idx]), 4.0 * sup_norm(phi), J2_TOLERANCE)


def j3_lambda_check(g: DiskFunction, z_grid: Optional[Sequence[complex]], spec: QuadratureSpec) -> SweepReport:
    """max Λ_{J₃} over the grid against (23/48)‖g‖_∞."""
    quantity = "j3_lambda"
    grid = list(z_grid) if z_grid is not None else lambda_grid((), n_angles=16)
    field = SolutionField(constant(0.0), constant(0.0), g, spec)

    def lam(z: complex) -> float:
        dz, dzbar = field.j3_derivatives(z)
        return abs(dz) + abs(dzbar)

    value, idx = _cell_max(ordered_map(lam, grid))
    return _bound_report(quantity, value, _polar(grid[idx]), 23.0 / 48.0 * sup_norm(g), J3_TOLERANCE)


# ---------------------------------------------------------------------------
# Modulus of continuity over point pairs
# ---------------------------------------------------------------------------

def pair_maximum(points: np.ndarray, values: np.ndarray,
                 denominator: Callable[[np.ndarray], np.ndarray]) -> Tuple[float, int, int, int]:
    """
    max over i < j of |v_i − v_j| / denominator(|z_i − z_j|), chunked by rows.

    Returns:
        (max, i, j, pair count)
    """
    n = points.size
    best, bi, bj = 0.0, 0, min(1, n - 1)
    for start in range(0, n, PAIR_CHUNK):
        rows = np.arange(start, min(start + PAIR_CHUNK, n))
        d = np.abs(points[rows, None] - points[None, :])
        num = np.abs(values[rows, None] - values[None, :])
        mask = (np.arange(n)[None, :] > rows[:, None]) & (d > 0)
        den = denominator(np.where(mask, d, 1.0))
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = np.where(mask, num / den, 0.0)
        ratio = np.where(np.isnan(ratio), np.inf, ratio)
        flat = int(np.argmax(ratio))
        value = float(ratio.flat[flat])
        if value > best:
            best, bi, bj = value, int(rows[flat // n]), int(flat % n)
    return best, bi, bj, n * (n - 1) // 2


def _modulus_sweep(quantity: str, evaluate: Callable[[np.ndarray], np.ndarray],
                   trace: Callable[[np.ndarray], np.ndarray],
                   denominator: Callable[[np.ndarray], np.ndarray], anchor_angles: Sequence[float],
                   majorant_ids: Tuple[str, ...], levels: int, growth_budget: float, seed: int) -> LipschitzReport:
    """
    Pair maxima per level over interior points and circle points.

    evaluate maps interior points to values; trace maps circle angles to the
    boundary values of the same function.
    """
    levels = _check_levels(levels)
    trend: List[Tuple[int, float]] = []
    best, witness, count = -1.0, None, 0
    for level in range(1, levels + 1):
        interior = modulus_points(level, anchor_angles, seed)
        angles = boundary_angles(level, anchor_angles)
        points = np.concatenate((interior, np.exp(1j * angles)))
        values = np.concatenate((
            np.asarray(evaluate(interior), dtype=complex),
            np.broadcast_to(np.asarray(trace(angles), dtype=complex), angles.shape),
        ))
        value, i, j, count = pair_maximum(points, values, denominator)
        trend.append((level, value))
        logger.debug(f"{quantity}: level {level}, {points.size} points, max {value:.6g}")
        if value > best:
            best, witness = value, point_pair(points[i], points[j])
    report = LipschitzReport(
        quantity=quantity,
        max_ratio=best,
        witness_pair=witness,
        pair_count=count,
        refinement_trend=trend,
        majorants=majorant_ids,
        diverged=not math.isfinite(best),
        growth_budget=growth_budget,
    )
    log = logger.info if report.passed else logger.error
    log(f"{quantity}: max ratio {best:.6g}, trend {[round(v, 6) for _, v in trend]}")
    return report


def modulus_report(field: SolutionField, omega1: Majorant, omega2: Majorant,
                   levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                   seed: int = 0, quantity: str = "modulus_f") -> LipschitzReport:
    """
    max over sampled pairs of |f(z₁) − f(z₂)|/(ω₁(|z₁ − z₂|) + ω₂(|z₁ − z₂|)).

    Point sets combine Sobol interior points, the near-boundary sweep cells
    (radii up to 1 − 2^{−10} at every level) and circle points, where f takes
    its Dirichlet value ψ.
    """
    cusp = tuple(dict.fromkeys(anchors(field.phi) + anchors(field.psi)))
    return _modulus_sweep(
        quantity,
        field.values_many,
        field.psi,
        lambda d: omega1(d) + omega2(d),
        cusp,
        (omega1.id, omega2.id),
        levels,
        growth_budget,
        seed,
    )


def q_modulus_report(psi: CircleFunction, omega2: Majorant, spec: QuadratureSpec,
                     levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                     seed: int = 0) -> LipschitzReport:
    """max over sampled pairs of |Q[ψ](z₁) − Q[ψ](z₂)|/ω₂(|z₁ − z₂|); Q[ψ] vanishes on the circle."""
    return _modulus_sweep(
        "modulus_q",
        lambda pts: ordered_map(lambda z: q_transform(psi, complex(z), spec), list(pts)),
        lambda t: 0.0,
        omega2,
        anchors(psi),
        (omega2.id,),
        levels,
        growth_budget,
        seed,
    )


def poisson_modulus_report(psi: CircleFunction, omega: Majorant, spec: QuadratureSpec,
                           levels: int = DEFAULT_LEVELS, growth_budget: float = DEFAULT_GROWTH_BUDGET,
                           seed: int = 0) -> LipschitzReport:
    """max over sampled pairs of |P[ψ](z₁) − P[ψ](z₂)|/ω(|z₁ − z₂|)."""
    return _modulus_sweep(
        "modulus_poisson",
        lambda pts: ordered_map(lambda z: poisson_extension(psi, complex(z), spec), list(pts)),
        psi,
        omega,
        anchors(psi),
        (omega.id,),
        levels,
        growth_budget,
        seed,
    )


def component_modulus_check(field: SolutionField, omega1: Majorant, levels: int = DEFAULT_LEVELS,
                            seed: int = 0) -> List[SweepReport]:
    """
    J₂ and J₃ against their explicit Lipschitz constants:
    |J₂(z₁) − J₂(z₂)| <= (8‖φ‖/ω₁(2))ω₁(d), |J₃(z₁) − J₃(z₂)| <= (23‖g‖/(24ω₁(2)))ω₁(d).
    """
    levels = _check_levels(levels)
    cusp = tuple(dict.fromkeys(anchors(field.phi) + anchors(field.psi)))
    points = modulus_points(levels, cusp, seed)
    components = ordered_map(field.components, [complex(z) for z in points])
    omega_2 = float(omega1(2.0))
    reports = []
    for quantity, attr, constant_factor, tolerance in (
        ("j2_modulus", "j2", 8.0 * sup_norm(field.phi), J2_TOLERANCE),
        ("j3_modulus", "j3", 23.0 * sup_norm(field.g) / 24.0, J3_TOLERANCE),
    ):
        values = np.array([getattr(c, attr) for c in components], dtype=complex)
        if constant_factor == 0.0:
            value, arg = float(np.max(np.abs(values - values[0]))), {}
        else:
            scale = constant_factor / omega_2
            value, i, j, _ = pair_maximum(points, values, lambda d: scale * omega1(d))
            arg = {"pair": [list(p) for p in point_pair(points[i], points[j])]}
        reports.append(_bound_report(quantity, value, arg, 1.0, tolerance))
    return reports


# ---------------------------------------------------------------------------
# Hypotheses and the φ ↔ φ₁ equivalence
# ---------------------------------------------------------------------------

def hypothesis_reports(phi: CircleFunction, psi: CircleFunction, omega1: Majorant, omega2: Majorant,
                       n_pairs: int = DEFAULT_PAIRS) -> List[object]:
    """Seminorm estimates of φ, φ₁ (against ω₁) and ψ (against ω₂), plus the HL report of ω₂."""
    reports: List[object] = []
    for name, f, omega in (("seminorm_phi", phi, omega1), ("seminorm_phi1", to_phi1(phi), omega1),
                           ("seminorm_psi", psi, omega2)):
        report = lipschitz_seminorm_circle(f, omega, n_pairs)
        reports.append(report.model_copy(update={"quantity": name}))
    hl: ConditionReport = check_hardy_littlewood(omega2)
    reports.append(hl)
    return reports


def phi1_equivalence_check(phi: CircleFunction, omega: Majorant, n_pairs: int = DEFAULT_PAIRS) -> SweepReport:
    """
    Seminorm equivalence of φ and φ₁ with the constant 2/ω(2).

    Both seminorms are measured on the same pairs and the sup-norm includes
    the pair nodes, so the inequality holds pair by pair.
    """
    quantity = "phi1_equivalence"
    phi1 = to_phi1(phi)
    t1, t2 = circle_pairs(anchors(phi), n_pairs)
    s_phi = float(np.max(pair_ratios(phi, omega, t1, t2)))
    s_phi1 = float(np.max(pair_ratios(phi1, omega, t1, t2)))
    node_sup = float(np.max(np.abs(np.concatenate((phi(t1), phi(t2))))))
    sup = max(sup_norm(phi), node_sup)
    extra = 2.0 / float(omega(2.0)) * sup
    slack = min(s_phi + extra - s_phi1, s_phi1 + extra - s_phi)
    ratios = [s_phi1 / (s_phi + extra) if s_phi + extra > 0 else 0.0,
              s_phi / (s_phi1 + extra) if s_phi1 + extra > 0 else 0.0]
    return _bound_report(quantity, max(ratios), {}, 1.0, 1e-12,
                         {"seminorm_phi": s_phi, "seminorm_phi1": s_phi1, "sup_norm": sup, "slack": slack})
