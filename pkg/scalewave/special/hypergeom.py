"""
Gauss hypergeometric function F(a, b; c; z) on 0 <= z < 1.

Below the switch point the defining series is summed directly. Above it the
z -> 1 connection formulas are used, with the logarithmic variants when
c - a - b is a nonnegative integer (every integer sqrt(delta) lands there).
Everything is vectorized over z.
"""
import logging
import math
from typing import Callable, Optional

import numpy as np
from scipy import special

from ..exceptions import DomainError, NoConvergence
from ..settings import scalewave_settings
from ..wave_models.hypergeom import HypParams

logger = logging.getLogger(__name__)


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0.5 and abs(v - round(v)) < 1e-12


def _is_terminating(p: HypParams) -> bool:
    return _is_nonpositive_integer(p.a) or _is_nonpositive_integer(p.b)


def _check_z(z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)):
        raise DomainError("z must be finite")
    if np.any(z < 0.0) or np.any(z >= 1.0):
        raise DomainError(f"z must lie in [0, 1), got range [{z.min()}, {z.max()}]")
    return z


def _scalar_or_array(out: np.ndarray, like):
    if np.ndim(like) == 0:
        return float(out)
    return out


def _power_series(ratio: Callable[[int], float], w: np.ndarray, tol: float, max_terms: int,
                  min_terms: int = 0, initial: float = 1.0,
                  bracket: Optional[Callable[[int, np.ndarray], np.ndarray]] = None) -> np.ndarray:
    """
    Sum c_k w^k g_k(w) with c_0 = ``initial`` and c_{k+1} / c_k = ratio(k).

    Stops once the geometric tail bound |term| q / (1 - q), q = w max(1, |ratio|),
    is below ``tol`` relative to the partial sum, and never before ``min_terms``.
    """
    power = np.full(w.shape, float(initial))
    total = power * (bracket(0, w) if bracket is not None else 1.0)
    scale = np.maximum(np.abs(total), np.finfo(float).tiny)
    done = np.zeros(w.shape, dtype=bool)

    for k in range(max_terms):
        power = power * (ratio(k) * w)
        term = power * bracket(k + 1, w) if bracket is not None else power
        total = np.where(done, total, total + term)
        if not np.any(power):
            return total

        q = w * max(1.0, abs(ratio(k + 1)))
        with np.errstate(divide="ignore", invalid="ignore"):
            tail = np.where(q < 1.0, np.abs(term) * q / (1.0 - q), np.inf)
        scale = np.maximum(scale, np.abs(total))
        if k + 1 >= min_terms:
            done |= tail <= tol * scale
        if np.all(done):
            return total

    raise NoConvergence(f"hypergeometric series did not reach tolerance {tol} within {max_terms} terms")


def _min_terms(*params: float) -> int:
    # past this index the term ratios are monotone and the tail bound holds
    return int(2.0 * sum(abs(v) for v in params)) + 1


def hyp2f1_series(p: HypParams, z, tol: float = None, max_terms: int = None):
    """F(a, b; c; z) by the defining series; exact for terminating parameters."""
    tol = tol or scalewave_settings.HYP_TOLERANCE
    max_terms = max_terms or scalewave_settings.HYP_MAX_TERMS
    zz = _check_z(z)
    a, b, c = p.a, p.b, p.c
    out = _power_series(
        lambda k: (a + k) * (b + k) / ((c + k) * (k + 1.0)),
        zz, tol, max_terms, min_terms=_min_terms(a, b, c),
    )
    return _scalar_or_array(out, z)


def _log_connection(a: float, b: float, c: float, m: int, w: np.ndarray,
                    tol: float, max_terms: int) -> np.ndarray:
    """c = a + b + m with integer m >= 0 (Abramowitz & Stegun 15.3.10 / 15.3.11)."""
    with np.errstate(divide="ignore"):
        log_w = np.log(w)
    min_terms = _min_terms(a, b, c)

    if m == 0:
        prefactor = special.gamma(c) * special.rgamma(a) * special.rgamma(b)
        series = _power_series(
            lambda k: (a + k) * (b + k) / (k + 1.0) ** 2,
            w, tol, max_terms, min_terms=min_terms,
            bracket=lambda k, w_: (2.0 * special.psi(k + 1.0) - special.psi(a + k)
                                   - special.psi(b + k) - log_w),
        )
        return prefactor * series

    finite = np.zeros_like(w)
    coeff = np.ones_like(w)
    for k in range(m):
        finite = finite + coeff
        if k + 1 < m:
            coeff = coeff * (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * w
    first = special.gamma(m) * special.gamma(c) * special.rgamma(a + m) * special.rgamma(b + m) * finite

    series = _power_series(
        lambda k: (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)),
        w, tol, max_terms, min_terms=min_terms, initial=1.0 / math.factorial(m),
        bracket=lambda k, w_: (log_w - special.psi(k + 1.0) - special.psi(k + m + 1.0)
                               + special.psi(a + k + m) + special.psi(b + k + m)),
    )
    second = (-w) ** m * special.gamma(c) * special.rgamma(a) * special.rgamma(b) * series
    return first - second


def _generic_connection(a: float, b: float, c: float, w: np.ndarray,
                        tol: float, max_terms: int) -> np.ndarray:
    """Non-integer s = c - a - b > 0 (DLMF 15.8.4 with z -> 1 - z)."""
    s = c - a - b
    min_terms = _min_terms(a, b, c)
    first = special.gamma(c) * special.gamma(s) * special.rgamma(c - a) * special.rgamma(c - b)
    second = special.gamma(c) * special.gamma(-s) * special.rgamma(a) * special.rgamma(b)
    s1 = _power_series(lambda k: (a + k) * (b + k) / ((1.0 - s + k) * (k + 1.0)),
                       w, tol, max_terms, min_terms=min_terms)
    s2 = _power_series(lambda k: (c - a + k) * (c - b + k) / ((1.0 + s + k) * (k + 1.0)),
                       w, tol, max_terms, min_terms=min_terms)
    return first * s1 + second * w ** s * s2


def hyp2f1_connection(p: HypParams, z, tol: float = None, max_terms: int = None):
    """F(a, b; c; z) by the z -> 1 connection formulas."""
    tol = tol or scalewave_settings.HYP_TOLERANCE
    max_terms = max_terms or scalewave_settings.HYP_MAX_TERMS
    zz = _check_z(z)
    if _is_terminating(p):
        return hyp2f1_series(p, z, tol=tol, max_terms=max_terms)

    a, b, c = p.a, p.b, p.c
    w = 1.0 - zz
    s = c - a - b
    m = int(round(s))
    gap = abs(s - m)
    exact = gap < scalewave_settings.HYP_LOG_CASE_TOLERANCE
    log_case = exact and m >= 0

    if not exact and gap < scalewave_settings.HYP_NEAR_LOG_BAND:
        # the two connection terms cancel to within 1/gap here
        logger.debug("hyp2f1 near-logarithmic parameters, summing series: a=%s b=%s c=%s", a, b, c)
        return hyp2f1_series(p, z, tol=tol, max_terms=max_terms)
    if s < 0 and not log_case:
        # Euler transformation F = (1 - z)^s F(c - a, c - b; c; z) moves s to -s > 0
        logger.debug("hyp2f1 Euler transform: a=%s b=%s c=%s", a, b, c)
        inner = hyp2f1_connection(HypParams(a=c - a, b=c - b, c=c), zz, tol=tol, max_terms=max_terms)
        out = w ** s * np.asarray(inner)
    elif log_case:
        logger.debug("hyp2f1 logarithmic connection: a=%s b=%s m=%s", a, b, m)
        out = _log_connection(a, b, a + b + m, m, w, tol, max_terms)
    else:
        out = _generic_connection(a, b, c, w, tol, max_terms)
    return _scalar_or_array(np.asarray(out, dtype=float), z)


def hyp2f1(p: HypParams, z, tol: float = None, max_terms: int = None):
    """
    Gauss hypergeometric function F(a, b; c; z) for 0 <= z < 1.

    :param HypParams p: parameters (a, b; c)
    :param z: scalar or array in [0, 1)
    :raises DomainError: z outside [0, 1)
    :raises NoConvergence: a branch failed to reach ``tol`` within ``max_terms``
    """
    tol = tol or scalewave_settings.HYP_TOLERANCE
    max_terms = max_terms or scalewave_settings.HYP_MAX_TERMS
    zz = _check_z(z)

    if _is_terminating(p):
        return hyp2f1_series(p, z, tol=tol, max_terms=max_terms)

    flat = zz.ravel()
    near = flat <= scalewave_settings.HYP_Z_SWITCH
    out = np.empty(flat.shape)
    if np.any(near):
        out[near] = hyp2f1_series(p, flat[near], tol=tol, max_terms=max_terms)
    if np.any(~near):
        out[~near] = hyp2f1_connection(p, flat[~near], tol=tol, max_terms=max_terms)
    return _scalar_or_array(out.reshape(zz.shape), z)


def hyp2f1_deriv(p: HypParams, z, order: int = 1, tol: float = None, max_terms: int = None):
    """
    k-th z-derivative (a)_k (b)_k / (c)_k F(a+k, b+k; c+k; z).

    With c = 1, order = 1 and a = b this is a^2 F(a+1, a+1; 2; z).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeff = 1.0
    for j in range(order):
        coeff *= (p.a + j) * (p.b + j) / (p.c + j)
    if coeff == 0.0:
        zz = _check_z(z)
        return _scalar_or_array(np.zeros(zz.shape), z)
    out = hyp2f1(p.shifted(order), z, tol=tol, max_terms=max_terms)
    return coeff * out
