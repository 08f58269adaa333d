from typing import Any

import numpy as np
from pydantic import BaseModel, root_validator


class Grid1D(BaseModel):
    """Uniform space-time grid for the finite-difference oracle."""
    x_min: float
    x_max: float
    nx: int
    dt: float
    t_end: float

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check(cls, values):
        if values["nx"] < 3:
            raise ValueError("nx must be >= 3")
        if values["x_max"] <= values["x_min"]:
            raise ValueError("x_max must exceed x_min")
        if values["dt"] <= 0 or values["t_end"] < 0:
            raise ValueError("dt must be positive and t_end nonnegative")
        return values

    @classmethod
    def from_spacing(cls, x_min: float, x_max: float, dx: float, t_end: float, cfl: float = 0.5) -> "Grid1D":
        """Grid with spacing close to dx and dt = cfl * dx, adjusted so t_end is a whole number of steps."""
        nx = int(round((x_max - x_min) / dx)) + 1
        dx = (x_max - x_min) / (nx - 1)
        steps = max(1, int(np.ceil(t_end / (cfl * dx) - 1e-9)))
        return cls(x_min=x_min, x_max=x_max, nx=nx, dt=t_end / steps if t_end > 0 else cfl * dx, t_end=t_end)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def steps(self) -> int:
        return int(round(self.t_end / self.dt))


class SolutionSlice(BaseModel):
    """Solution values on the grid nodes at time t."""
    t: float
    values: Any

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True

    def sample(self, nodes: np.ndarray, x) -> np.ndarray:
        """Linear interpolation of the slice at x."""
        return np.interp(x, nodes, self.values)
