"""
Solution operators of the free wave equation v_tt = Δv, v(0) = phi, v_t(0) = 0.

Odd n uses spherical means, even n the singular-weight ball means of the method
of descent. Both share the normalization 1 / (n-2)!! (odd) or 1 / n!! (even) and
the operator ((1/t) d/dt)^k; only n = 3 and n = 2 are wired up.
"""
import logging
from typing import Callable

import numpy as np
from scipy import special

from ..exceptions import StepTooLarge, UnsupportedDimension
from ..quadrature import ball_integral_scaled, sphere_mean, sphere_mean_dr
from ..wave_models.fields import ScalarField
from ..wave_models.quadrature import QuadratureConfig

logger = logging.getLogger(__name__)


def double_factorial(n: int) -> int:
    return int(special.factorial2(n, exact=True))


def iterated_t_operator(g: Callable, k: int, t, step: float):
    """
    ((1/t) d/dt)^k g(t) by nested central differences; k = 0 is the identity.

    :raises StepTooLarge: the stencil would reach t <= 0
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return g(t)
    t = np.asarray(t, dtype=float)
    if np.any(t <= step * k):
        raise StepTooLarge(f"t must exceed {k} * step = {step * k}")

    def inner(s):
        return iterated_t_operator(g, k - 1, s, step)

    return (inner(t + step) - inner(t - step)) / (2.0 * step * t)


def _prepare(phi: ScalarField, t, cfg: QuadratureConfig):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("t must be nonnegative")
    step = cfg.t_derivative_step * np.maximum(1.0, t)
    return t, step


def _finish(phi: ScalarField, t, x, value, like):
    value = np.where(t == 0.0, phi(np.asarray(x, dtype=float)), value)
    return float(value) if np.ndim(like) == 0 else value


def free_wave_odd(phi: ScalarField, t, x, cfg: QuadratureConfig):
    """
    w[phi](t, x) for odd n; for n = 3 this is d/dt (t * mean of phi over the sphere S_t(x)).

    The derivative is M + t M' with M' = mean of grad(phi) . omega when phi has a
    gradient, otherwise a central difference of the bracket with step
    cfg.t_derivative_step * max(1, t). The bracket is odd in t, so the stencil may
    cross t = 0.
    """
    n = phi.dim
    if n != 3:
        raise UnsupportedDimension(f"odd-dimensional free waves are implemented for n = 3, got n = {n}")
    t_arr, step = _prepare(phi, t, cfg)
    if phi.is_zero:
        return _finish(phi, t_arr, x, np.zeros(t_arr.shape), t)

    norm = 1.0 / double_factorial(n - 2)
    k = (n - 3) // 2
    if phi.has_gradient and k == 0:
        value = sphere_mean(phi, x, t_arr, cfg) + t_arr * sphere_mean_dr(phi, x, t_arr, cfg)
    else:
        def bracket(tau):
            return iterated_t_operator(lambda s: s ** (n - 2) * sphere_mean(phi, x, s, cfg), k, tau,
                                       cfg.t_derivative_step)
        value = (bracket(t_arr + step) - bracket(t_arr - step)) / (2.0 * step)
    return _finish(phi, t_arr, x, norm * np.asarray(value), t)


def free_wave_even(phi: ScalarField, t, x, cfg: QuadratureConfig):
    """
    w[phi](t, x) for even n; for n = 2 this is (1/2) d/dt (t^2 * weighted ball mean of phi).

    The t-derivative is a central difference of the bracket t J(t) / pi, which is odd in t.
    """
    n = phi.dim
    if n != 2:
        raise UnsupportedDimension(f"even-dimensional free waves are implemented for n = 2, got n = {n}")
    t_arr, step = _prepare(phi, t, cfg)
    if phi.is_zero:
        return _finish(phi, t_arr, x, np.zeros(t_arr.shape), t)

    norm = 1.0 / double_factorial(n)
    k = (n - 2) // 2

    def bracket(tau):
        # t^n * ball_weighted_mean = t^(n-1) J(t) / pi
        return iterated_t_operator(lambda s: s ** (n - 1) * ball_integral_scaled(phi, x, s, cfg) / np.pi,
                                   k, tau, cfg.t_derivative_step)

    value = (bracket(t_arr + step) - bracket(t_arr - step)) / (2.0 * step)
    return _finish(phi, t_arr, x, norm * np.asarray(value), t)


def free_wave(phi: ScalarField, t, x, cfg: QuadratureConfig):
    if phi.dim % 2:
        return free_wave_odd(phi, t, x, cfg)
    return free_wave_even(phi, t, x, cfg)
