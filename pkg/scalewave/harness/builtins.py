"""
Built-in data families. Every family ships its analytic gradient; sources are
time-independent profiles.
"""
import numpy as np

from ..exceptions import ConfigError
from ..wave_models.fields import CauchyData, ScalarField, SpacetimeField
from ..wave_models.run_config import (
    BumpSpec,
    ConstantSpec,
    FieldSpec,
    GaussianSpec,
    RunConfig,
    SineSpec,
    ZeroSpec,
)


def _center(spec: GaussianSpec, dim: int) -> np.ndarray:
    if isinstance(spec.center, list):
        if len(spec.center) != dim:
            raise ConfigError(f"gaussian center {spec.center} does not have {dim} components")
        return np.asarray(spec.center, dtype=float)
    return np.array([float(spec.center)] + [0.0] * (dim - 1))


def gaussian(spec: GaussianSpec, dim: int) -> ScalarField:
    center = _center(spec, dim)
    scale = spec.width ** 2

    def value(x):
        d = np.asarray(x, dtype=float) - center
        return spec.amplitude * np.exp(-np.sum(d * d, axis=-1) / scale)

    def gradient(x):
        d = np.asarray(x, dtype=float) - center
        return (-2.0 / scale) * d * value(x)[..., None]

    return ScalarField(dim=dim, value=value, gradient=gradient)


def sine(spec: SineSpec, dim: int) -> ScalarField:
    k = spec.k

    def value(x):
        return np.sin(k * np.asarray(x, dtype=float)[..., 0])

    def gradient(x):
        x = np.asarray(x, dtype=float)
        g = np.zeros(x.shape)
        g[..., 0] = k * np.cos(k * x[..., 0])
        return g

    return ScalarField(dim=dim, value=value, gradient=gradient)


def bump(spec: BumpSpec, dim: int) -> ScalarField:
    radius2 = spec.R ** 2

    def _q(x):
        x = np.asarray(x, dtype=float)
        return np.sum(x * x, axis=-1) / radius2

    def value(x):
        q = _q(x)
        inside = q < 1.0
        safe = np.where(inside, q, 0.0)
        return np.where(inside, spec.amplitude * np.exp(1.0 - 1.0 / (1.0 - safe)), 0.0)

    def gradient(x):
        x = np.asarray(x, dtype=float)
        q = _q(x)
        inside = q < 1.0
        safe = np.where(inside, q, 0.0)
        factor = np.where(inside, -value(x) / (1.0 - safe) ** 2 * (2.0 / radius2), 0.0)
        return factor[..., None] * x

    return ScalarField(dim=dim, value=value, gradient=gradient, support_radius=spec.R)


def constant(spec: ConstantSpec, dim: int) -> ScalarField:
    c = spec.c
    return ScalarField(
        dim=dim,
        value=lambda x: np.full(np.shape(x)[:-1], c),
        gradient=lambda x: np.zeros(np.shape(x)),
    )


BUILTINS = {
    'gaussian': gaussian,
    'sine': sine,
    'bump': bump,
    'constant': constant,
}


def build_field(spec: FieldSpec, dim: int) -> ScalarField:
    if isinstance(spec, ZeroSpec):
        return ScalarField.zero(dim)
    try:
        builder = BUILTINS[spec.family]
    except KeyError:
        raise ConfigError(f"unknown field family: {spec.family}")
    return builder(spec, dim)


def build_data(config: RunConfig) -> CauchyData:
    dim = config.dim
    f = build_field(config.f, dim)
    source = SpacetimeField.zero(dim) if f.is_zero else SpacetimeField.from_profile(f)
    return CauchyData.build(dim, u0=build_field(config.u0, dim), u1=build_field(config.u1, dim), f=source)
