from typing import Tuple

from pydantic import BaseModel, Field, root_validator, validator

from .fields import CauchyData
from .params import ModelParams
from .quadrature import QuadratureConfig


class EvalRequest(BaseModel):
    """Evaluate u(t, x) for the given data and coefficients."""
    t: float
    x: Tuple[float, ...]
    data: CauchyData
    params: ModelParams
    quad: QuadratureConfig = Field(default_factory=QuadratureConfig)

    class Config:
        allow_mutation = False

    @validator("x", pre=True)
    def _wrap_scalar(cls, v):
        if isinstance(v, (int, float)):
            return (v,)
        return v

    @root_validator(skip_on_failure=True)
    def _check(cls, values):
        if values["t"] < 0:
            raise ValueError("t must be nonnegative")
        if len(values["x"]) != values["data"].dim:
            raise ValueError(f"x has {len(values['x'])} components, data has dim {values['data'].dim}")
        return values

    @property
    def dim(self) -> int:
        return self.data.dim
