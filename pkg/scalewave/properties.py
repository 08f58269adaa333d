"""
Identity checks of the kernel E and the hypergeometric layer.

Each check samples points, evaluates a residual and returns a PropertyResult.
Sample points come from a seeded numpy Generator so runs are reproducible.
"""
import logging
from typing import Dict, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from .kernels import (
    closed_form_delta_one,
    evaluate_dE_db,
    evaluate_dE_dt,
    evaluate_dE_dx,
    evaluate_dE_dy,
    evaluate_E,
    kernel_K0,
    kernel_K1,
)
from .settings import scalewave_settings
from .special.hypergeom import hyp2f1, hyp2f1_connection, hyp2f1_deriv, hyp2f1_series
from .wave_models.hypergeom import HypParams
from .wave_models.params import ModelParams

logger = logging.getLogger(__name__)


class PropertyResult(BaseModel):
    name: str
    passed: bool
    max_error: float
    tolerance: float
    samples: int
    details: Dict[str, float] = {}

    class Config:
        allow_mutation = False


def _result(name: str, errors: np.ndarray, tolerance: float, passed: bool = None, **details) -> PropertyResult:
    errors = np.abs(np.asarray(errors, dtype=float))
    max_error = float(np.max(errors)) if errors.size else 0.0
    if passed is None:
        passed = bool(max_error <= tolerance)
    logger.info("%s: max error %.3e (tolerance %.1e) %s", name, max_error, tolerance, "ok" if passed else "FAILED")
    return PropertyResult(name=name, passed=passed, max_error=max_error, tolerance=tolerance,
                          samples=int(errors.size), details={k: float(v) for k, v in details.items()})


def sample_interior_points(rng: np.random.Generator, count: int, t_max: float = 3.0,
                           margin: float = 0.05) -> Tuple[np.ndarray, ...]:
    """Points (t, x, b, y) with 0 < b < t <= t_max and |y - x| < t - b, ``margin`` away from every edge."""
    t = rng.uniform(4.0 * margin, t_max, count)
    b = rng.uniform(margin, t - 2.0 * margin)
    x = rng.uniform(-1.0, 1.0, count)
    reach = t - b - margin
    y = x + rng.uniform(-1.0, 1.0, count) * reach
    return t, x, b, y


def _pde_residual(t, x, b, y, params: ModelParams, h: float) -> np.ndarray:
    tol = scalewave_settings.HYP_RESIDUAL_TOLERANCE
    e = lambda tt, xx: evaluate_E(tt, xx, b, y, params, tol=tol)
    e0 = e(t, x)
    e_tt = (e(t + h, x) - 2.0 * e0 + e(t - h, x)) / h ** 2
    e_xx = (e(t, x + h) - 2.0 * e0 + e(t, x - h)) / h ** 2
    e_t = (e(t + h, x) - e(t - h, x)) / (2.0 * h)
    return e_tt - e_xx + params.mu / (1.0 + t) * e_t + params.nu2 / (1.0 + t) ** 2 * e0


def _adjoint_residual(t, x, b, y, params: ModelParams, h: float) -> np.ndarray:
    tol = scalewave_settings.HYP_RESIDUAL_TOLERANCE
    e = lambda bb, yy: evaluate_E(t, x, bb, yy, params, tol=tol)
    e0 = e(b, y)
    e_bb = (e(b + h, y) - 2.0 * e0 + e(b - h, y)) / h ** 2
    e_yy = (e(b, y + h) - 2.0 * e0 + e(b, y - h)) / h ** 2
    e_b = (e(b + h, y) - e(b - h, y)) / (2.0 * h)
    return e_bb - e_yy - params.mu / (1.0 + b) * e_b + (params.mu + params.nu2) / (1.0 + b) ** 2 * e0


def _residual_check(name: str, residual, params: ModelParams, rng: np.random.Generator, count: int,
                    steps: Sequence[float], tolerance: float, floor: float = 1e-8) -> PropertyResult:
    """
    Residual at the finest step within tolerance, and shrinking like h^2 between steps.

    A ratio is only judged while the finer residual is above both ``floor`` and the
    rounding level of a second difference, 64 eps max|E| / h^2.
    """
    t, x, b, y = sample_interior_points(rng, count)
    scale = float(np.max(np.abs(evaluate_E(t, x, b, y, params))))
    noise = [max(floor, 64.0 * np.finfo(float).eps * scale / h ** 2) for h in steps]
    maxima = [float(np.max(np.abs(residual(t, x, b, y, params, h)))) for h in steps]
    details = {f"max_h{i}": m for i, m in enumerate(maxima)}
    decays = True
    for i in range(len(steps) - 1):
        if maxima[i + 1] <= noise[i + 1]:
            continue
        ratio = maxima[i] / maxima[i + 1]
        details[f"ratio_{i}"] = ratio
        decays = decays and ratio >= 0.6 * (steps[i] / steps[i + 1]) ** 2
    passed = maxima[-1] <= tolerance and decays
    return _result(name, [maxima[-1]], tolerance, passed=passed, **details)


def check_pde_residual(params: ModelParams, rng: np.random.Generator, count: int = 20,
                       steps: Sequence[float] = (2e-3, 1e-3, 5e-4), tolerance: float = 1e-5) -> PropertyResult:
    """E_tt - E_xx + mu/(1+t) E_t + nu2/(1+t)^2 E = 0 in (t, x)."""
    return _residual_check("pde_residual", _pde_residual, params, rng, count, steps, tolerance)


def check_adjoint_residual(params: ModelParams, rng: np.random.Generator, count: int = 20,
                           steps: Sequence[float] = (2e-3, 1e-3, 5e-4), tolerance: float = 1e-5) -> PropertyResult:
    """E_bb - E_yy - mu/(1+b) E_b + (mu + nu2)/(1+b)^2 E = 0 in (b, y)."""
    return _residual_check("adjoint_residual", _adjoint_residual, params, rng, count, steps, tolerance)


def _one_sided(f, v0, sigma_h):
    """Second-order one-sided derivative stepping by sigma_h."""
    return (-3.0 * f(v0) + 4.0 * f(v0 + sigma_h) - f(v0 + 2.0 * sigma_h)) / (2.0 * sigma_h)


def _characteristic_samples(rng: np.random.Generator, count: int, t_max: float = 3.0):
    t = rng.uniform(0.1, t_max, count)
    b = rng.uniform(0.0, t - 0.05)
    x = rng.uniform(-1.0, 1.0, count)
    return t, x, b


def check_characteristic_identity(params: ModelParams, rng: np.random.Generator, count: int = 50,
                                  h: float = 1e-5, tolerance: float = 1e-6) -> PropertyResult:
    """
    [E_t -+ E_x] + 2^(r-2) mu (1+t)^(-mu/2-1) (1+b)^(mu/2) = 0 on y = x +- (t - b).

    The derivatives are one-sided differences pointing into the triangle.
    """
    t, x, b = _characteristic_samples(rng, count)
    r, mu = params.sqrt_delta, params.mu
    closed = 2.0 ** (r - 2.0) * mu * (1.0 + t) ** (-0.5 * mu - 1.0) * (1.0 + b) ** (0.5 * mu)
    errors = []
    for sign in (1.0, -1.0):
        y = x + sign * (t - b)
        e_t = _one_sided(lambda tt: evaluate_E(tt, x, b, y, params), t, h)
        e_x = _one_sided(lambda xx: evaluate_E(t, xx, b, y, params), x, sign * h)
        errors.append(e_t - sign * e_x + closed)
        analytic = evaluate_dE_dt(t, x, b, y, params) - sign * evaluate_dE_dx(t, x, b, y, params)
        errors.append(analytic + closed)
    return _result("characteristic_identity", np.concatenate(errors), tolerance)


def check_transport_identity(params: ModelParams, rng: np.random.Generator, count: int = 50,
                             tolerance: float = 1e-10) -> PropertyResult:
    """2 E_b -+ 2 E_y - mu/(1+b) E = 0 along y = x +- (t - b)."""
    t, x, b = _characteristic_samples(rng, count)
    errors = []
    for sign in (1.0, -1.0):
        y = x + sign * (t - b)
        e = evaluate_E(t, x, b, y, params)
        residual = (2.0 * evaluate_dE_db(t, x, b, y, params) - sign * 2.0 * evaluate_dE_dy(t, x, b, y, params)
                    - params.mu / (1.0 + b) * e)
        errors.append(residual / np.maximum(np.abs(e), 1.0))
    return _result("transport_identity", np.concatenate(errors), tolerance)


def check_symmetry(params: ModelParams, rng: np.random.Generator, count: int = 100,
                   tolerance: float = 1e-12) -> PropertyResult:
    """E(t,x;b,y) = (1+b)^mu (1+t)^(-mu) E(b,y;t,x)."""
    t, x, b, y = sample_interior_points(rng, count, margin=1e-3)
    mu = params.mu
    lhs = evaluate_E(t, x, b, y, params)
    rhs = (1.0 + b) ** mu * (1.0 + t) ** (-mu) * evaluate_E(b, y, t, x, params)
    return _result("symmetry", (lhs - rhs) / np.abs(lhs), tolerance)


def _scaled(value, expected):
    return (value - expected) / max(abs(expected), 1.0)


def check_special_values(params: ModelParams, rng: np.random.Generator, count: int = 50,
                         tolerance: float = 1e-10) -> PropertyResult:
    """Closed values of E on the diagonal and on the characteristics, and the delta = 1 forms."""
    t, x, b = _characteristic_samples(rng, count)
    r, mu = params.sqrt_delta, params.mu
    errors = []

    diagonal = evaluate_E(t, x, t, x, params)
    errors.append(diagonal / 2.0 ** (r - 1.0) - 1.0)

    on_char = 2.0 ** (r - 1.0) * (1.0 + t) ** (-0.5 * mu) * (1.0 + b) ** (0.5 * mu)
    for sign in (1.0, -1.0):
        errors.append(evaluate_E(t, x, b, x + sign * (t - b), params) / on_char - 1.0)

    if params.is_delta_one:
        y = x + rng.uniform(-1.0, 1.0, count) * (t - b)
        y0 = x + rng.uniform(-1.0, 1.0, count) * t
        for i in range(count):
            closed = closed_form_delta_one(t[i], b[i], params)
            errors.append(np.array([
                _scaled(evaluate_E(t[i], x[i], b[i], y[i], params), closed.E),
                _scaled(evaluate_dE_db(t[i], x[i], b[i], y[i], params), closed.dE_db),
                _scaled(kernel_K1(t[i], x[i], y0[i], params), closed.K1),
                _scaled(kernel_K0(t[i], x[i], y0[i], params), closed.K0),
            ]))
    if params.mu == 0.0 and params.nu2 == 0.0:
        t2, x2, b2, y2 = sample_interior_points(rng, count)
        errors.append(evaluate_E(t2, x2, b2, y2, params) - 1.0)
    return _result("special_values", np.concatenate([np.atleast_1d(e) for e in errors]), tolerance)


def check_hypergeometric_ode(params: ModelParams, z: Sequence[float] = None,
                             tolerance: float = 1e-8) -> PropertyResult:
    """z(1-z) F'' + [1 - (2 - r) z] F' - a^2 F = 0 for F = F(a, a; 1; z), a = (1 - r)/2."""
    z = np.linspace(0.0, 0.95, 39) if z is None else np.asarray(z, dtype=float)
    r = params.sqrt_delta
    p = HypParams(a=params.hyp_a)
    f = np.asarray(hyp2f1(p, z))
    f_z = np.asarray(hyp2f1_deriv(p, z, order=1))
    f_zz = np.asarray(hyp2f1_deriv(p, z, order=2))
    residual = z * (1.0 - z) * f_zz + (1.0 - (2.0 - r) * z) * f_z - params.hyp_a ** 2 * f
    return _result("hypergeometric_ode", residual, tolerance)


def check_branch_consistency(params: ModelParams, z: Sequence[float] = None,
                             tolerance: float = 1e-10) -> PropertyResult:
    """Series and connection branches agree in a band around the switch point."""
    z = np.linspace(0.6, 0.85, 11) if z is None else np.asarray(z, dtype=float)
    errors = []
    for p in (HypParams(a=params.hyp_a), HypParams(a=params.hyp_a).shifted(1)):
        series = np.asarray(hyp2f1_series(p, z))
        connection = np.asarray(hyp2f1_connection(p, z))
        errors.append((series - connection) / np.abs(series))
    return _result("branch_consistency", np.concatenate(errors), tolerance)


def run_property_suite(params: ModelParams, seed: int = 0) -> List[PropertyResult]:
    """Every kernel and hypergeometric check for one parameter set."""
    rng = np.random.default_rng(seed)
    results = [
        check_pde_residual(params, rng),
        check_adjoint_residual(params, rng),
        check_characteristic_identity(params, rng),
        check_transport_identity(params, rng),
        check_symmetry(params, rng),
        check_special_values(params, rng),
        check_hypergeometric_ode(params),
        check_branch_consistency(params),
    ]
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning("property suite failed for mu=%s nu2=%s: %s", params.mu, params.nu2, ", ".join(failed))
    return results
