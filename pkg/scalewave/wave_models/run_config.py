from enum import Enum
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, root_validator, validator

from .quadrature import QuadratureConfig


class CommandName(str, Enum):
    EVAL_KERNEL = 'eval-kernel'
    SOLVE = 'solve'
    COMPARE_ORACLE = 'compare-oracle'
    PROPERTY_SUITE = 'property-suite'
    HUYGENS_SCAN = 'huygens-scan'


class OutputFormat(str, Enum):
    CSV = 'csv'
    JSON = 'json'


class GaussianSpec(BaseModel):
    """amplitude * exp(-|x - center|^2 / width^2)"""
    family: Literal['gaussian'] = 'gaussian'
    center: Union[float, List[float]] = 0.0
    width: float = 1.0
    amplitude: float = 1.0

    @validator("width")
    def _check_width(cls, v):
        if v <= 0:
            raise ValueError("width must be positive")
        return v


class SineSpec(BaseModel):
    """sin(k x1)"""
    family: Literal['sine'] = 'sine'
    k: float = 1.0


class BumpSpec(BaseModel):
    """amplitude * exp(1 - 1 / (1 - |x|^2 / R^2)) inside |x| < R, zero outside"""
    family: Literal['bump'] = 'bump'
    R: float = 1.0
    amplitude: float = 1.0

    @validator("R")
    def _check_radius(cls, v):
        if v <= 0:
            raise ValueError("R must be positive")
        return v


class ConstantSpec(BaseModel):
    family: Literal['constant'] = 'constant'
    c: float = 1.0


class ZeroSpec(BaseModel):
    family: Literal['zero'] = 'zero'


FieldSpec = Union[GaussianSpec, SineSpec, BumpSpec, ConstantSpec, ZeroSpec]


class RunConfig(BaseModel):
    """
    One CLI run, read from a flat JSON object with flag overrides.

    ``x`` entries are points of R^dim; a scalar entry stands for (x, 0, ..., 0), which is
    also how radii are given to compare-oracle (dim 3) and huygens-scan. ``b`` and ``y``
    are only read by eval-kernel, whose rows are all (t, x, b, y) in the
    characteristic triangle.
    """
    command: CommandName
    mu: float = 0.0
    nu2: float = 0.0
    dim: int = 1
    u0: FieldSpec = Field(default_factory=ZeroSpec, discriminator='family')
    u1: FieldSpec = Field(default_factory=ZeroSpec, discriminator='family')
    f: FieldSpec = Field(default_factory=ZeroSpec, discriminator='family')
    t: List[float] = [1.0]
    x: List[Union[float, List[float]]] = [0.0]
    b: List[float] = [0.0]
    y: List[float] = [0.0]
    quad: QuadratureConfig = Field(default_factory=QuadratureConfig)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    emit_plot: bool = False
    oracle_dx: float = 5e-4
    oracle_cfl: float = 0.5
    oracle_tolerance: float = 1e-3
    oracle_padding: float = 1.0
    seed: int = 0

    class Config:
        allow_mutation = False
        extra = "forbid"

    @validator("dim")
    def _check_dim(cls, v):
        if v not in (1, 2, 3):
            raise ValueError(f"dim must be 1, 2 or 3, got {v}")
        return v

    @validator("t")
    def _check_times(cls, v):
        if not v:
            raise ValueError("t grid must be nonempty")
        if any(t < 0 for t in v):
            raise ValueError("times must be nonnegative")
        return v

    @validator("x")
    def _check_points(cls, v):
        if not v:
            raise ValueError("x grid must be nonempty")
        return v

    @root_validator(skip_on_failure=True)
    def _check_point_dims(cls, values):
        dim = values["dim"]
        for point in values["x"]:
            if isinstance(point, list) and len(point) != dim:
                raise ValueError(f"x entry {point} does not have {dim} components")
        if values["oracle_dx"] <= 0 or not 0 < values["oracle_cfl"] <= 0.9:
            raise ValueError("oracle_dx must be positive and oracle_cfl in (0, 0.9]")
        return values

    @property
    def points(self) -> List[Tuple[float, ...]]:
        out = []
        for point in self.x:
            if isinstance(point, list):
                out.append(tuple(float(v) for v in point))
            else:
                out.append((float(point),) + (0.0,) * (self.dim - 1))
        return out
