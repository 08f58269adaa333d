"""
One-dimensional representation formula.

u(t, x) = 1/2 (1+t)^(-mu/2) (u0(x+t) + u0(x-t))
        + 2^(-r) int_{x-t}^{x+t} [u0(y) K0(t,x;y) + (u1(y) + mu u0(y)) K1(t,x;y)] dy
        + 2^(-r) int_0^t int_{x-t+b}^{x+t-b} f(b,y) E(t,x;b,y) dy db,    r = sqrt(delta)
"""
import logging

import numpy as np

from ..kernels import evaluate_E, kernel_K0, kernel_K1
from ..quadrature import integrate_interval, integrate_nested
from ..wave_models.request import EvalRequest

logger = logging.getLogger(__name__)


def _check_dim(req: EvalRequest):
    if req.dim != 1:
        raise ValueError(f"expected a one-dimensional request, got dim {req.dim}")


def travelling_part_1d(req: EvalRequest) -> float:
    _check_dim(req)
    t, x = req.t, req.x[0]
    u0 = req.data.u0
    if u0.is_zero:
        return 0.0
    pts = np.array([x + t, x - t])
    return float(0.5 * (1.0 + t) ** (-0.5 * req.params.mu) * np.sum(u0(pts)))


def kernel_part_1d(req: EvalRequest) -> float:
    _check_dim(req)
    t, x = req.t, req.x[0]
    data, params = req.data, req.params
    if t == 0.0 or (data.u0.is_zero and data.u1.is_zero):
        return 0.0

    def integrand(y):
        out = np.zeros(np.shape(y))
        if not data.u0.is_zero:
            u0 = data.u0(y)
            out = out + u0 * kernel_K0(t, x, y, params) + params.mu * u0 * kernel_K1(t, x, y, params)
        if not data.u1.is_zero:
            out = out + data.u1(y) * kernel_K1(t, x, y, params)
        return out

    return 2.0 ** (-params.sqrt_delta) * integrate_interval(integrand, x - t, x + t, req.quad)


def source_part_1d(req: EvalRequest) -> float:
    _check_dim(req)
    t, x = req.t, req.x[0]
    f, params = req.data.f, req.params
    if t == 0.0 or f.is_zero:
        return 0.0

    def integrand(b, y):
        return f(b, y[..., None]) * evaluate_E(t, x, b, y, params)

    total = integrate_nested(integrand, 0.0, t, lambda b: x - t + b, lambda b: x + t - b, req.quad)
    return 2.0 ** (-params.sqrt_delta) * total


def solve_1d(req: EvalRequest) -> float:
    """u(t, x) for dim 1; at t = 0 this is u0(x)."""
    _check_dim(req)
    if req.t == 0.0:
        return float(req.data.u0(np.array([req.x[0]])))
    u = travelling_part_1d(req) + kernel_part_1d(req) + source_part_1d(req)
    logger.debug("solve_1d t=%s x=%s u=%s", req.t, req.x[0], u)
    return u
