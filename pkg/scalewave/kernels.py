"""
Kernel functions of the one-dimensional representation formula.

E(t, x; b, y) is the two-point influence function of the source term; its value
at b = 0 (K1) and its negative b-derivative at b = 0 (K0) weight the initial data.
The array evaluators broadcast over (t, x, b, y) and accept either ordering of
t and b as long as |y - x| <= |t - b|; the KernelPoint wrappers take one point of
the backward characteristic triangle 0 <= b <= t.
"""
import logging

import numpy as np
from pydantic import BaseModel, ValidationError

from .exceptions import DomainError, ParameterError
from .settings import scalewave_settings
from .special.hypergeom import hyp2f1, hyp2f1_deriv
from .wave_models.hypergeom import HypParams
from .wave_models.kernel_point import KernelPoint
from .wave_models.params import ModelParams

logger = logging.getLogger(__name__)


def _power(base, exponent):
    return np.exp(exponent * np.log(base))


def _as_float(value, *like):
    if all(np.ndim(v) == 0 for v in like):
        return float(value)
    return value


def make_point(t: float, x: float, b: float, y: float) -> KernelPoint:
    """Build a KernelPoint, reporting points outside the triangle as DomainError."""
    try:
        return KernelPoint(t=t, x=x, b=b, y=y)
    except ValidationError as e:
        raise DomainError(str(e)) from e


def _check_domain(t, x, b, y):
    t, x, b, y = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (t, x, b, y)))
    if np.any(t < 0) or np.any(b < 0):
        raise DomainError("kernel times must be nonnegative")
    slack = scalewave_settings.KERNEL_DOMAIN_SLACK
    reach = np.abs(t - b) * (1.0 + slack) + slack * np.maximum(1.0, np.maximum(np.abs(x), np.abs(y)))
    if np.any(np.abs(y - x) > reach):
        raise DomainError("|y - x| exceeds |t - b|: point outside the characteristic triangle")
    return t, x, b, y


def _z(t, b, s2):
    numerator = np.maximum((t - b) ** 2 - s2, 0.0)
    denominator = (t + b + 2.0) ** 2 - s2
    if np.any(denominator <= 0):
        raise DomainError("(t + b + 2)^2 - (y - x)^2 must be positive")
    return numerator / denominator, denominator


def evaluate_z(t, x, b, y):
    t, x, b, y = _check_domain(t, x, b, y)
    z, _ = _z(t, b, (y - x) ** 2)
    return z


class _KernelParts:
    """Shared pieces of E and its derivatives at broadcast points."""

    def __init__(self, t, x, b, y, params: ModelParams, tol: float = None):
        self.t, self.x, self.b, self.y = _check_domain(t, x, b, y)
        self.mu = params.mu
        self.r = params.sqrt_delta
        self.a = params.hyp_a
        self.s = self.y - self.x
        self.s2 = self.s ** 2
        self.z, self.D = _z(self.t, self.b, self.s2)
        self.prefactor = (
            _power(1.0 + self.t, -0.5 * self.mu + self.a)
            * _power(1.0 + self.b, 0.5 * self.mu + self.a)
            * _power(self.D, 0.5 * (self.r - 1.0))
        )
        hyp = HypParams(a=self.a)
        self.F = np.asarray(hyp2f1(hyp, self.z, tol=tol))
        # F_z = a^2 F(a+1, a+1; 2; z)
        self.Fz = np.asarray(hyp2f1_deriv(hyp, self.z, tol=tol))

    @property
    def sum_term(self):
        return self.t + self.b + 2.0


def evaluate_E(t, x, b, y, params: ModelParams, tol: float = None):
    """E at broadcast points; ``tol`` overrides the series tolerance of the hypergeometric layer."""
    k = _KernelParts(t, x, b, y, params, tol=tol)
    return _as_float(k.prefactor * k.F, t, x, b, y)


def evaluate_dE_db(t, x, b, y, params: ModelParams):
    k = _KernelParts(t, x, b, y, params)
    dz_db = 4.0 * (1.0 + k.t) * (k.s2 - (k.t - k.b) * k.sum_term) / k.D ** 2
    out = k.prefactor * (
        k.Fz * dz_db
        + (0.5 * k.mu + k.a) / (1.0 + k.b) * k.F
        + (k.r - 1.0) * k.sum_term / k.D * k.F
    )
    return _as_float(out, t, x, b, y)


def evaluate_dE_dt(t, x, b, y, params: ModelParams):
    k = _KernelParts(t, x, b, y, params)
    dz_dt = 4.0 * (1.0 + k.b) * ((k.t - k.b) * k.sum_term + k.s2) / k.D ** 2
    out = k.prefactor * (
        k.Fz * dz_dt
        + (-0.5 * k.mu + k.a) / (1.0 + k.t) * k.F
        + (k.r - 1.0) * k.sum_term / k.D * k.F
    )
    return _as_float(out, t, x, b, y)


def evaluate_dE_dy(t, x, b, y, params: ModelParams):
    k = _KernelParts(t, x, b, y, params)
    dz_dy = -8.0 * k.s * (1.0 + k.t) * (1.0 + k.b) / k.D ** 2
    out = k.prefactor * (k.Fz * dz_dy - (k.r - 1.0) * k.s / k.D * k.F)
    return _as_float(out, t, x, b, y)


def evaluate_dE_dx(t, x, b, y, params: ModelParams):
    # E depends on (y - x)^2 only
    return -evaluate_dE_dy(t, x, b, y, params)


def z_arg(p: KernelPoint) -> float:
    """z = ((t-b)^2 - (y-x)^2) / ((t+b+2)^2 - (y-x)^2), in [0, 1) on the triangle."""
    return float(evaluate_z(p.t, p.x, p.b, p.y))


def kernel_E(p: KernelPoint, params: ModelParams) -> float:
    return evaluate_E(p.t, p.x, p.b, p.y, params)


def kernel_dE_db(p: KernelPoint, params: ModelParams) -> float:
    return evaluate_dE_db(p.t, p.x, p.b, p.y, params)


def kernel_dE_dt(p: KernelPoint, params: ModelParams) -> float:
    return evaluate_dE_dt(p.t, p.x, p.b, p.y, params)


def kernel_dE_dy(p: KernelPoint, params: ModelParams) -> float:
    return evaluate_dE_dy(p.t, p.x, p.b, p.y, params)


def kernel_dE_dx(p: KernelPoint, params: ModelParams) -> float:
    return evaluate_dE_dx(p.t, p.x, p.b, p.y, params)


def kernel_K1(t, x, y, params: ModelParams):
    """K1(t, x; y) = E(t, x; 0, y), for |y - x| <= t. Broadcasts over arrays."""
    return evaluate_E(t, x, 0.0, y, params)


def kernel_K0(t, x, y, params: ModelParams):
    """K0(t, x; y) = -dE/db(t, x; 0, y), for |y - x| <= t. Broadcasts over arrays."""
    return -evaluate_dE_db(t, x, 0.0, y, params)


class DeltaOneKernels(BaseModel):
    """Closed forms of the kernels when delta = 1, where F(0, 0; 1; z) = 1."""
    E: float
    dE_db: float
    K0: float
    K1: float

    class Config:
        allow_mutation = False


def closed_form_delta_one(t: float, b: float, params: ModelParams) -> DeltaOneKernels:
    """
    E = (1+t)^(-mu/2) (1+b)^(mu/2), independent of x and y.

    :raises ParameterError: params.delta != 1
    """
    if not params.is_delta_one:
        raise ParameterError(f"closed forms need delta = 1, got {params.delta}")
    half_mu = 0.5 * params.mu
    decay = (1.0 + t) ** (-half_mu)
    return DeltaOneKernels(
        E=decay * (1.0 + b) ** half_mu,
        dE_db=half_mu * decay * (1.0 + b) ** (half_mu - 1.0),
        K0=-half_mu * decay,
        K1=decay,
    )
