"""
Run Configuration

Pydantic models for the JSON run configs consumed by the CLI. Boundary
data, source terms and majorants are discriminated on the "type" key and
build the immutable domain values of the numerical modules.
"""

import logging
from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter
from typing_extensions import Annotated

from .boundary_data import BivarPoly, CircleFunction, HoelderCusp, Scaled, Sum, TrigPoly
from .majorants import Majorant, PowerLaw, Tabulated
from .quadrature import QuadratureSpec
from .solver import GridSpec

logger = logging.getLogger(__name__)

_STRICT = ConfigDict(str_strip_whitespace=True, validate_assignment=True, extra='forbid')


class ComplexValue(BaseModel):
    model_config = _STRICT

    re: float = 0.0
    im: float = 0.0

    def build(self) -> complex:
        return complex(self.re, self.im)


class TrigCoeff(ComplexValue):
    k: int = Field(..., description="Frequency index of e^{ikt}")


class TrigPolySpec(BaseModel):
    """Input model for a trigonometric polynomial Σ c_k e^{ikt}."""
    model_config = _STRICT

    type: Literal["trigpoly"]
    coeffs: List[TrigCoeff] = Field(default_factory=list)

    def build(self) -> TrigPoly:
        return TrigPoly.from_dict({c.k: c.build() for c in self.coeffs}) if self.coeffs else TrigPoly(((0, 0j),))


class HoelderSpec(BaseModel):
    """Input model for the cusp |e^{it} − e^{ia}|^β."""
    model_config = _STRICT

    type: Literal["hoelder"]
    beta: float = Field(..., description="Hölder exponent", gt=0.0, lt=1.0)
    anchor_t: float = Field(default=0.0, description="Angle a of the cusp anchor")

    def build(self) -> HoelderCusp:
        return HoelderCusp(self.beta, self.anchor_t)


class SumSpec(BaseModel):
    model_config = _STRICT

    type: Literal["sum"]
    terms: List["CircleSpec"] = Field(..., min_length=1)

    def build(self) -> Sum:
        return Sum(tuple(term.build() for term in self.terms))


class ScaledSpec(BaseModel):
    model_config = _STRICT

    type: Literal["scaled"]
    factor: ComplexValue
    term: "CircleSpec"

    def build(self) -> Scaled:
        return Scaled(self.factor.build(), self.term.build())


CircleSpec = Annotated[Union[TrigPolySpec, HoelderSpec, SumSpec, ScaledSpec], Field(discriminator="type")]

SumSpec.model_rebuild()
ScaledSpec.model_rebuild()


class BivarTerm(ComplexValue):
    j: int = Field(..., description="Power of z", ge=0)
    k: int = Field(..., description="Power of conj(z)", ge=0)


class BivarPolySpec(BaseModel):
    """Input model for the source term Σ a_jk z^j conj(z)^k."""
    model_config = _STRICT

    type: Literal["bivarpoly"] = "bivarpoly"
    terms: List[BivarTerm] = Field(default_factory=list)

    def build(self) -> BivarPoly:
        return BivarPoly.from_dict({(t.j, t.k): t.build() for t in self.terms})


class PowerSpec(BaseModel):
    model_config = _STRICT

    type: Literal["power"]
    beta: float = Field(..., description="Exponent of t^β", gt=0.0, le=1.0)

    def build(self) -> PowerLaw:
        return PowerLaw(self.beta)


class TabulatedSpec(BaseModel):
    model_config = _STRICT

    type: Literal["tabulated"]
    knots: List[Tuple[float, float]] = Field(..., description="(t, ω(t)) pairs", min_length=1)

    def build(self) -> Tabulated:
        return Tabulated.from_pairs(self.knots)


MajorantSpec = Annotated[Union[PowerSpec, TabulatedSpec], Field(discriminator="type")]


class MajorantPair(BaseModel):
    model_config = _STRICT

    omega1: MajorantSpec
    omega2: MajorantSpec

    def build(self) -> Tuple[Majorant, Majorant]:
        return self.omega1.build(), self.omega2.build()


class VerificationSettings(BaseModel):
    model_config = _STRICT

    levels: int = Field(default=3, description="Dyadic refinement levels", ge=2, le=4)
    growth_budget: float = Field(default=1.10, description="Allowed growth between levels", gt=1.0)
    n_pairs: int = Field(default=20000, description="Uniform-grid pairs for circle seminorms", ge=1)
    seed: int = Field(default=0, description="Seed of the Sobol pair sampler", ge=0)
    include_corollaries: bool = Field(default=True, description="Also run the ψ = 0 sub-configuration")


class OutputSpec(BaseModel):
    model_config = _STRICT

    csv: Optional[str] = Field(default=None, description="CSV path (stdout when absent)")
    json_path: Optional[str] = Field(default=None, alias="json", description="JSON path (stdout when absent)")


def _zero_circle() -> TrigPolySpec:
    return TrigPolySpec(type="trigpoly", coeffs=[])


class RunConfig(BaseModel):
    """Complete run configuration."""
    model_config = _STRICT

    boundary_phi: CircleSpec = Field(default_factory=_zero_circle)
    boundary_psi: CircleSpec = Field(default_factory=_zero_circle)
    source_g: BivarPolySpec = Field(default_factory=BivarPolySpec)
    quadrature: QuadratureSpec = Field(default_factory=QuadratureSpec)
    grid: GridSpec = Field(default_factory=GridSpec)
    majorants: Optional[MajorantPair] = None
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    output: OutputSpec = Field(default_factory=OutputSpec)

    def phi(self) -> CircleFunction:
        return self.boundary_phi.build()

    def psi(self) -> CircleFunction:
        return self.boundary_psi.build()

    def g(self) -> BivarPoly:
        return self.source_g.build()


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """
    Read and validate a JSON run config.

    Raises:
        OSError: If the file cannot be read
        pydantic.ValidationError: If the JSON is malformed or violates the schema
    """
    text = Path(path).read_text(encoding="utf-8")
    config = RunConfig.model_validate_json(text)
    logger.info(f"Loaded run config {path}")
    return config


def parse_majorant(text: str) -> Majorant:
    """Parse a majorant from a JSON string or a path to a JSON file."""
    candidate = Path(text)
    if not text.lstrip().startswith("{") and candidate.is_file():
        text = candidate.read_text(encoding="utf-8")
    return TypeAdapter(MajorantSpec).validate_json(text).build()
