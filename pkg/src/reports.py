"""
Report Models

Pydantic models shared by the boundary-data, solver and verification modules.
Every report exposes to_json_dict() for the CLI's JSON documents.
"""

import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_GROWTH_BUDGET = 1.10

Pair = Tuple[Tuple[float, float], Tuple[float, float]]


def point_pair(z1: complex, z2: complex) -> Pair:
    """Serialise two complex points as ((re, im), (re, im))."""
    return ((float(z1.real), float(z1.imag)), (float(z2.real), float(z2.imag)))


def is_refinement_stable(trend: Sequence[Tuple[int, float]], budget: float = DEFAULT_GROWTH_BUDGET) -> bool:
    """
    Decide refinement stability of a per-level maximum.

    For every level L >= 2 the maximum at level L+1 may exceed the maximum at
    level L by at most the factor budget. Non-finite maxima are never stable.

    Args:
        trend: (level, max) pairs in increasing level order
        budget: Allowed growth factor between consecutive levels

    Returns:
        True if the trend is stable
    """
    values = dict(trend)
    if any(not math.isfinite(v) for v in values.values()):
        return False
    for level, current in values.items():
        if level < 2 or level + 1 not in values:
            continue
        following = values[level + 1]
        if current == 0.0:
            if following > 1e-300:
                return False
        elif following > budget * current:
            return False
    return True


class SweepReport(BaseModel):
    """Normalised maximum of a lemma/theorem quantity over a sweep grid."""
    model_config = ConfigDict(extra='forbid')

    quantity: str
    max: float = Field(..., ge=0.0)
    argmax: Dict[str, Any] = Field(default_factory=dict)
    bound: Optional[float] = None
    passed: bool
    skipped: bool = False
    trend: List[Tuple[int, float]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def skip(cls, quantity: str, reason: str) -> "SweepReport":
        return cls(quantity=quantity, max=0.0, passed=True, skipped=True, details={"reason": reason})

    def to_json_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "max": self.max,
            "argmax": self.argmax,
            "bound": self.bound,
            "pass": self.passed,
            "skipped": self.skipped,
            "trend": [list(item) for item in self.trend],
            "details": self.details,
        }


class LipschitzReport(BaseModel):
    """Empirical Lipschitz-seminorm estimate over sampled point pairs."""
    model_config = ConfigDict(extra='forbid')

    quantity: str
    max_ratio: float = Field(..., ge=0.0)
    witness_pair: Optional[Pair] = None
    pair_count: int = Field(..., ge=0)
    refinement_trend: List[Tuple[int, float]] = Field(default_factory=list)
    majorants: Tuple[str, ...] = ()
    diverged: bool = False
    growth_budget: float = DEFAULT_GROWTH_BUDGET

    @property
    def stable(self) -> bool:
        return is_refinement_stable(self.refinement_trend, self.growth_budget)

    @property
    def passed(self) -> bool:
        if self.diverged:
            return False
        return self.stable if self.refinement_trend else True

    def to_json_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "max": self.max_ratio,
            "argmax": {"pair": [list(p) for p in self.witness_pair]} if self.witness_pair else {},
            "bound": None,
            "pass": self.passed,
            "diverged": self.diverged,
            "pair_count": self.pair_count,
            "majorants": list(self.majorants),
            "trend": [list(item) for item in self.refinement_trend],
        }


class TraceRow(BaseModel):
    model_config = ConfigDict(extra='forbid')

    r: float
    value_error: float
    derivative_error: Optional[float] = None


class TraceReport(BaseModel):
    """Boundary trace errors max_ζ |f(rζ) − ψ(ζ)| and |∂_z̄ f(rζ) − φ(ζ)| per radius."""
    model_config = ConfigDict(extra='forbid')

    rows: List[TraceRow]

    @property
    def decreasing(self) -> bool:
        errors = [row.value_error for row in sorted(self.rows, key=lambda row: row.r)]
        return all(b <= a + 1e-12 for a, b in zip(errors, errors[1:]))

    def to_json_dict(self) -> dict:
        return {
            "quantity": "boundary_trace",
            "rows": [row.model_dump() for row in self.rows],
            "decreasing": self.decreasing,
            "pass": self.decreasing,
        }
