"""
Input Validators

Validation utilities for disk, circle and majorant constraints.
"""

import math
from typing import Union

Number = Union[int, float]


class DomainError(ValueError):
    """Raised when an argument lies outside the region an operation admits."""


class QuadratureError(ArithmeticError):
    """Raised when a quadrature rule meets a non-finite integrand value."""


class EvaluationDomainError(ArithmeticError):
    """Raised when an evaluation on a validated config leaves the admissible region."""


def validate_interior_point(z: complex, margin: float = 0.0) -> complex:
    """
    Validate that a point lies strictly inside the unit disk.

    Args:
        z: Point to validate
        margin: Required distance from the unit circle (default: 0.0)

    Returns:
        The validated point

    Raises:
        DomainError: If |z| >= 1 - margin
    """
    if not (abs(z) < 1.0 - margin):
        if margin > 0:
            raise DomainError(f"Point must satisfy |z| < 1 - {margin:g}, got |z| = {abs(z):.17g}")
        raise DomainError(f"Point must lie inside the unit disk, got |z| = {abs(z):.17g}")
    return z


def validate_closed_disk_point(z: complex) -> complex:
    """
    Validate that a point lies in the closed unit disk.

    Raises:
        DomainError: If |z| > 1
    """
    if abs(z) > 1.0 + 1e-15:
        raise DomainError(f"Point must lie in the closed unit disk, got |z| = {abs(z):.17g}")
    return z


def validate_positive(value: Number, name: str = "value") -> float:
    """
    Validate that a real number is finite and strictly positive.

    Raises:
        DomainError: If value is not a positive finite number
    """
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a finite positive number, got {value}")
    return float(value)


def validate_exponent(beta: Number, allow_one: bool = True) -> float:
    """
    Validate a Hölder / power-law exponent.

    Args:
        beta: Exponent to validate
        allow_one: Accept beta == 1 (power-law majorants) or not (cusps)

    Returns:
        Validated exponent

    Raises:
        DomainError: If beta is outside (0, 1] (or (0, 1) when allow_one is False)
    """
    upper_ok = beta <= 1.0 if allow_one else beta < 1.0
    if not (beta > 0.0 and upper_ok):
        interval = "(0, 1]" if allow_one else "(0, 1)"
        raise DomainError(f"Exponent must lie in {interval}, got {beta}")
    return float(beta)


def validate_node_count(n: int, minimum: int, name: str = "node count") -> int:
    """
    Validate a quadrature node / sample count.

    Raises:
        DomainError: If n is below the minimum
    """
    if n < minimum:
        raise DomainError(f"{name} must be at least {minimum}, got {n}")
    return int(n)


def validate_radius(r: Number, closed: bool = False) -> float:
    """
    Validate a radius in [0, 1) (or [0, 1] when closed).

    Raises:
        DomainError: If r is out of range
    """
    upper_ok = r <= 1.0 if closed else r < 1.0
    if not (r >= 0.0 and upper_ok):
        interval = "[0, 1]" if closed else "[0, 1)"
        raise DomainError(f"Radius must lie in {interval}, got {r}")
    return float(r)


def validate_step(z: complex, h: float, reach: float) -> float:
    """
    Validate a finite-difference step against the distance to the boundary.

    Args:
        z: Stencil center
        h: Step size
        reach: Required multiple of h between z and the unit circle

    Raises:
        DomainError: If the stencil would leave the disk
    """
    validate_positive(h, "step")
    if 1.0 - abs(z) < reach * h:
        raise DomainError(
            f"Stencil of step {h:g} at |z| = {abs(z):.6g} needs 1 - |z| >= {reach:g}h"
        )
    return float(h)
