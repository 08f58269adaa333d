"""
Representation formula in dimensions 2 and 3.

u(t, x) = (1+t)^(-mu/2) w[u0](t, x)
        + 2^(1-r) int_0^t [w[u0](s, x) K0(t,0;s) + w[u1 + mu u0](s, x) K1(t,0;s)] ds
        + 2^(1-r) int_0^t int_0^(t-b) w[f(b, .)](s, x) E(t,0;b,s) ds db

with w the free wave operator of the dimension and the one-dimensional kernels
evaluated at x = 0, y = s.
"""
import logging

import numpy as np

from ..kernels import evaluate_E, kernel_K0, kernel_K1
from ..quadrature import interval_rule
from ..wave_models.request import EvalRequest
from .free_wave import free_wave

logger = logging.getLogger(__name__)


def _check_dim(req: EvalRequest):
    if req.dim not in (2, 3):
        raise ValueError(f"expected a request in dimension 2 or 3, got dim {req.dim}")


def travelling_part_nd(req: EvalRequest) -> float:
    _check_dim(req)
    u0 = req.data.u0
    if u0.is_zero:
        return 0.0
    return (1.0 + req.t) ** (-0.5 * req.params.mu) * free_wave(u0, req.t, req.x, req.quad)


def kernel_part_nd(req: EvalRequest) -> float:
    _check_dim(req)
    t, data, params, quad = req.t, req.data, req.params, req.quad
    if t == 0.0 or (data.u0.is_zero and data.u1.is_zero):
        return 0.0

    s, ws = interval_rule(0.0, t, quad)
    k1 = kernel_K1(t, 0.0, s, params)
    integrand = np.zeros(s.shape)
    if not data.u0.is_zero:
        w0 = free_wave(data.u0, s, req.x, quad)
        integrand = integrand + w0 * (kernel_K0(t, 0.0, s, params) + params.mu * k1)
    if not data.u1.is_zero:
        integrand = integrand + free_wave(data.u1, s, req.x, quad) * k1
    return 2.0 ** (1.0 - params.sqrt_delta) * float(np.sum(ws * integrand))


def source_part_nd(req: EvalRequest) -> float:
    _check_dim(req)
    t, f, params, quad = req.t, req.data.f, req.params, req.quad
    if t == 0.0 or f.is_zero:
        return 0.0

    b, wb = interval_rule(0.0, t, quad)
    s, ws = interval_rule(0.0, t - b, quad)
    kernel = evaluate_E(t, 0.0, b[:, None], s, params)
    inner = np.empty(b.shape)
    for i, b_i in enumerate(b):
        waves = free_wave(f.at(b_i), s[i], req.x, quad)
        inner[i] = np.sum(ws[i] * waves * kernel[i])
    logger.debug("source_part_nd: %d x %d nodes", b.size, s.shape[-1])
    return 2.0 ** (1.0 - params.sqrt_delta) * float(np.sum(wb * inner))


def solve_nd(req: EvalRequest) -> float:
    """u(t, x) for dim 2 or 3; at t = 0 this is u0(x)."""
    _check_dim(req)
    if req.t == 0.0:
        return float(req.data.u0(np.asarray(req.x)))
    u = travelling_part_nd(req) + kernel_part_nd(req) + source_part_nd(req)
    logger.debug("solve_nd dim=%d t=%s x=%s u=%s", req.dim, req.t, req.x, u)
    return u
