"""
Splitting of the solution into its travelling part, the kernel integrals over the
initial data and the source contribution.

For delta = 1 the kernels collapse to powers of (1+t) and the kernel part has a
closed form; in odd dimension n >= 3 it then lives on the sphere |y - x| = t only
(Huygens' principle), while in one dimension it is an integral over the whole cone.
"""
import logging

import numpy as np
from pydantic import BaseModel

from ..exceptions import ParameterError
from ..quadrature import ball_weighted_mean, integrate_interval, sphere_mean
from ..wave_models.fields import ScalarField
from ..wave_models.request import EvalRequest
from .multi_d import kernel_part_nd, source_part_nd, travelling_part_nd
from .one_d import kernel_part_1d, source_part_1d, travelling_part_1d

logger = logging.getLogger(__name__)


class HuygensSplit(BaseModel):
    huygens: float
    non_huygens: float
    source: float

    class Config:
        allow_mutation = False

    @property
    def total(self) -> float:
        return self.huygens + self.non_huygens + self.source


def split_huygens(req: EvalRequest) -> HuygensSplit:
    if req.dim == 1:
        parts = travelling_part_1d(req), kernel_part_1d(req), source_part_1d(req)
    else:
        parts = travelling_part_nd(req), kernel_part_nd(req), source_part_nd(req)
    return HuygensSplit(huygens=parts[0], non_huygens=parts[1], source=parts[2])


def _initial_combination(req: EvalRequest) -> ScalarField:
    """u1 + (mu/2) u0 as one field."""
    u0, u1 = req.data.u0, req.data.u1
    half_mu = 0.5 * req.params.mu
    gradient = None
    if u0.has_gradient and u1.has_gradient:
        gradient = lambda x: u1.gradient(x) + half_mu * np.asarray(u0.gradient(x))
    return ScalarField(
        dim=req.dim,
        value=lambda x: u1.value(x) + half_mu * np.asarray(u0.value(x)),
        gradient=gradient,
        is_zero=u0.is_zero and u1.is_zero,
    )


def non_huygens_delta_one(req: EvalRequest) -> float:
    """
    Kernel part of the solution in closed form for delta = 1:

    n = 1: 1/2 (1+t)^(-mu/2) int_{x-t}^{x+t} (u1 + mu/2 u0) dy
    n = 2: 1/2 (1+t)^(-mu/2) t^2 (weighted mean of u1 + mu/2 u0 over B_t(x))
    n = 3: (1+t)^(-mu/2) t (mean of u1 + mu/2 u0 over S_t(x))

    :raises ParameterError: delta != 1
    """
    if not req.params.is_delta_one:
        raise ParameterError(f"closed form needs delta = 1, got {req.params.delta}")
    t = req.t
    combo = _initial_combination(req)
    if t == 0.0 or combo.is_zero:
        return 0.0

    decay = (1.0 + t) ** (-0.5 * req.params.mu)
    if req.dim == 1:
        x = req.x[0]
        return 0.5 * decay * integrate_interval(combo, x - t, x + t, req.quad)
    if req.dim == 2:
        return 0.5 * decay * t ** 2 * ball_weighted_mean(combo, req.x, t, req.quad)
    return decay * t * sphere_mean(combo, req.x, t, req.quad)
