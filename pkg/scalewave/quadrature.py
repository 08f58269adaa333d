"""
Fixed-order quadrature rules.

Integrands are vectorized: interval integrands take an array of abscissae,
field integrands take an array of points of shape (..., dim).
"""
import logging
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from .wave_models.fields import ScalarField
from .wave_models.quadrature import QuadratureConfig

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@lru_cache(maxsize=None)
def _panel_rule(order: int, panels: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite rule on [0, 1]."""
    nodes, weights = _gauss_legendre(order)
    edges = np.linspace(0.0, 1.0, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def interval_rule(a, b, cfg: QuadratureConfig) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights on [a, b].

    ``a`` and ``b`` may be arrays of equal shape S; the result then has shape S + (n,).
    """
    unit_x, unit_w = _panel_rule(cfg.interval_order, cfg.interval_panels)
    a = np.asarray(a, dtype=float)[..., None]
    b = np.asarray(b, dtype=float)[..., None]
    return a + (b - a) * unit_x, (b - a) * unit_w


def integrate_interval(g: Callable, a: float, b: float, cfg: QuadratureConfig) -> float:
    """Composite Gauss-Legendre approximation of the integral of g over [a, b]."""
    if a == b:
        return 0.0
    x, w = interval_rule(a, b, cfg)
    return float(np.sum(w * np.asarray(g(x), dtype=float)))


def integrate_nested(g: Callable, a: float, b: float, lower: Callable, upper: Callable,
                     cfg: QuadratureConfig) -> float:
    """
    Iterated integral of g(s, y) for s in [a, b] and y in [lower(s), upper(s)].

    ``g`` receives broadcastable arrays (s[:, None], y) with y of shape (n_outer, n_inner).
    """
    if a == b:
        return 0.0
    s, ws = interval_rule(a, b, cfg)
    y, wy = interval_rule(lower(s), upper(s), cfg)
    values = np.asarray(g(s[:, None], y), dtype=float)
    return float(np.sum(ws * np.sum(wy * values, axis=-1)))


@lru_cache(maxsize=None)
def _sphere_rule(polar: int, azimuth: int) -> Tuple[np.ndarray, np.ndarray]:
    """Unit directions (n, 3) and weights summing to one."""
    cos_theta, w_polar = _gauss_legendre(polar)
    sin_theta = np.sqrt(1.0 - cos_theta ** 2)
    alpha = 2.0 * np.pi * np.arange(azimuth) / azimuth
    directions = np.stack([
        sin_theta[:, None] * np.cos(alpha)[None, :],
        sin_theta[:, None] * np.sin(alpha)[None, :],
        np.broadcast_to(cos_theta[:, None], (polar, azimuth)),
    ], axis=-1).reshape(-1, 3)
    weights = np.broadcast_to(0.5 * w_polar[:, None] / azimuth, (polar, azimuth)).ravel()
    directions.setflags(write=False)
    weights = np.array(weights)
    weights.setflags(write=False)
    return directions, weights


def _check_center(phi: ScalarField, center, dim: int) -> np.ndarray:
    center = np.asarray(center, dtype=float).reshape(-1)
    if phi.dim != dim or center.shape != (dim,):
        raise ValueError(f"expected a field and center in R^{dim}, got field dim {phi.dim}, center {center.shape}")
    return center


def _sphere_points(center: np.ndarray, r, cfg: QuadratureConfig):
    directions, weights = _sphere_rule(cfg.sphere_polar, cfg.sphere_azimuth)
    r = np.asarray(r, dtype=float)
    points = center + r[..., None, None] * directions
    return points, directions, weights


def sphere_mean(phi: ScalarField, center, r, cfg: QuadratureConfig):
    """
    Average of phi over the sphere of radius r about center in R^3.

    ``r`` may be an array; a negative radius gives the same mean since the rule is
    symmetric under reflection of the directions.
    """
    center = _check_center(phi, center, 3)
    points, _, weights = _sphere_points(center, r, cfg)
    out = np.sum(weights * phi(points), axis=-1)
    return float(out) if np.ndim(r) == 0 else out


def sphere_mean_dr(phi: ScalarField, center, r, cfg: QuadratureConfig):
    """d/dr of sphere_mean: the mean of grad(phi) . omega. Needs a gradient callback."""
    center = _check_center(phi, center, 3)
    points, directions, weights = _sphere_points(center, r, cfg)
    radial = np.sum(phi.grad(points) * directions, axis=-1)
    out = np.sum(weights * radial, axis=-1)
    return float(out) if np.ndim(r) == 0 else out


@lru_cache(maxsize=None)
def _disk_rule(radial: int, angular: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Offsets sin(theta) omega on the unit disk and weights for the measure
    sin(theta) dtheta dalpha, theta in [0, pi/2].
    """
    nodes, weights = _gauss_legendre(radial)
    theta = 0.25 * np.pi * (nodes + 1.0)
    w_theta = 0.25 * np.pi * weights
    alpha = 2.0 * np.pi * np.arange(angular) / angular
    sin_theta = np.sin(theta)
    offsets = np.stack([
        sin_theta[:, None] * np.cos(alpha)[None, :],
        sin_theta[:, None] * np.sin(alpha)[None, :],
    ], axis=-1).reshape(-1, 2)
    w = (w_theta * sin_theta)[:, None] * np.full(angular, 2.0 * np.pi / angular)[None, :]
    w = w.ravel()
    offsets.setflags(write=False)
    w.setflags(write=False)
    return offsets, w


def ball_integral_scaled(phi: ScalarField, center, r, cfg: QuadratureConfig):
    """
    J(r) = (1/r) integral over B_r(center) of phi(z) / (r^2 - |z - center|^2)^(1/2) dz.

    The substitution rho = r sin(theta) removes the boundary singularity. J is even
    in r, so negative radii are accepted.
    """
    center = _check_center(phi, center, 2)
    offsets, weights = _disk_rule(cfg.ball_radial, cfg.ball_angular)
    r = np.asarray(r, dtype=float)
    points = center + r[..., None, None] * offsets
    out = np.sum(weights * phi(points), axis=-1)
    return float(out) if np.ndim(r) == 0 else out


def ball_weighted_mean(phi: ScalarField, center, r, cfg: QuadratureConfig):
    """
    Integral of phi(z) / (r^2 - |z - center|^2)^(1/2) over B_r(center), divided by pi r^2.

    For phi = 1 this is 2 / r.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("ball radius must be positive")
    out = np.asarray(ball_integral_scaled(phi, center, r_arr, cfg)) / (np.pi * r_arr)
    return float(out) if np.ndim(r) == 0 else out
