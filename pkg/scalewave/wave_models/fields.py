from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, root_validator, validator


class ConeSupport(BaseModel):
    """support f(t, .) ⊂ {|x| <= R + t}"""
    R: float

    class Config:
        allow_mutation = False


def _as_points(x, dim: int) -> np.ndarray:
    points = np.asarray(x, dtype=float)
    if dim == 1 and (points.ndim == 0 or points.shape[-1] != 1):
        points = points[..., None]
    return points


class ScalarField(BaseModel):
    """
    Real data u(x) on R^dim.

    ``value`` receives points of shape (..., dim) and returns shape (...);
    ``gradient`` (optional) returns shape (..., dim). Callbacks must be pure.
    ``support_radius`` is advisory: the field vanishes for |x| > support_radius.
    """
    dim: int
    value: Callable
    gradient: Optional[Callable] = None
    support_radius: Optional[float] = None
    is_zero: bool = False

    class Config:
        allow_mutation = False

    @validator("dim")
    def _check_dim(cls, v):
        if v < 1:
            raise ValueError("dim must be positive")
        return v

    @classmethod
    def zero(cls, dim: int) -> "ScalarField":
        return cls(
            dim=dim,
            value=lambda x: np.zeros(np.shape(x)[:-1]),
            gradient=lambda x: np.zeros(np.shape(x)),
            support_radius=0.0,
            is_zero=True,
        )

    @property
    def has_gradient(self) -> bool:
        return self.gradient is not None

    def __call__(self, x) -> np.ndarray:
        return np.asarray(self.value(_as_points(x, self.dim)), dtype=float)

    def grad(self, x) -> np.ndarray:
        if self.gradient is None:
            raise AttributeError("field has no gradient callback")
        return np.asarray(self.gradient(_as_points(x, self.dim)), dtype=float)

    def lift(self) -> "ScalarField":
        """The same data viewed on R^(dim+1), constant in the extra coordinate."""
        dim = self.dim
        gradient = None
        if self.gradient is not None:
            def gradient(x, _g=self.gradient):
                x = np.asarray(x, dtype=float)
                g = np.asarray(_g(x[..., :dim]), dtype=float)
                return np.concatenate([g, np.zeros(x.shape[:-1] + (1,))], axis=-1)
        return ScalarField(
            dim=dim + 1,
            value=lambda x, _v=self.value: _v(np.asarray(x, dtype=float)[..., :dim]),
            gradient=gradient,
            support_radius=None,
            is_zero=self.is_zero,
        )


class SpacetimeField(BaseModel):
    """
    Source term f(t, x), t >= 0, x in R^dim.

    ``value(t, x)`` broadcasts t against x.shape[:-1]; ``gradient_x`` is optional.
    """
    dim: int
    value: Callable
    gradient_x: Optional[Callable] = None
    support_descriptor: Optional[ConeSupport] = None
    is_zero: bool = False

    class Config:
        allow_mutation = False

    @classmethod
    def zero(cls, dim: int) -> "SpacetimeField":
        return cls(
            dim=dim,
            value=lambda t, x: np.zeros(np.broadcast_shapes(np.shape(t), np.shape(x)[:-1])),
            gradient_x=lambda t, x: np.zeros(np.broadcast_shapes(np.shape(t), np.shape(x)[:-1]) + (np.shape(x)[-1],)),
            support_descriptor=ConeSupport(R=0.0),
            is_zero=True,
        )

    @classmethod
    def from_profile(cls, profile: ScalarField) -> "SpacetimeField":
        """Time-independent source f(t, x) = profile(x)."""
        def value(t, x, _v=profile.value):
            x = np.asarray(x, dtype=float)
            shape = np.broadcast_shapes(np.shape(t), x.shape[:-1])
            return np.broadcast_to(_v(x), shape)

        gradient_x = None
        if profile.gradient is not None:
            def gradient_x(t, x, _g=profile.gradient):
                x = np.asarray(x, dtype=float)
                shape = np.broadcast_shapes(np.shape(t), x.shape[:-1]) + (x.shape[-1],)
                return np.broadcast_to(_g(x), shape)

        support = None if profile.support_radius is None else ConeSupport(R=profile.support_radius)
        return cls(dim=profile.dim, value=value, gradient_x=gradient_x,
                   support_descriptor=support, is_zero=profile.is_zero)

    def __call__(self, t, x) -> np.ndarray:
        return np.asarray(self.value(t, _as_points(x, self.dim)), dtype=float)

    def at(self, b: float) -> ScalarField:
        """The spatial slice f(b, .) used as data of the parameter-dependent free wave problem."""
        gradient = None
        if self.gradient_x is not None:
            gradient = lambda x, _g=self.gradient_x: _g(b, x)
        support = None
        if self.support_descriptor is not None:
            support = self.support_descriptor.R + b
        return ScalarField(
            dim=self.dim,
            value=lambda x, _v=self.value: _v(b, x),
            gradient=gradient,
            support_radius=support,
            is_zero=self.is_zero,
        )


class CauchyData(BaseModel):
    """Data triple (u0, u1, f) of the Cauchy problem."""
    dim: int
    u0: ScalarField
    u1: ScalarField
    f: SpacetimeField

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check_dims(cls, values):
        dim = values["dim"]
        if dim not in (1, 2, 3):
            raise ValueError(f"dim must be 1, 2 or 3, got {dim}")
        for name in ("u0", "u1", "f"):
            if values[name].dim != dim:
                raise ValueError(f"{name} has dim {values[name].dim}, expected {dim}")
        return values

    @classmethod
    def build(cls, dim: int, u0: ScalarField = None, u1: ScalarField = None,
              f: SpacetimeField = None) -> "CauchyData":
        return cls(
            dim=dim,
            u0=u0 if u0 is not None else ScalarField.zero(dim),
            u1=u1 if u1 is not None else ScalarField.zero(dim),
            f=f if f is not None else SpacetimeField.zero(dim),
        )

    @property
    def support_radius(self) -> Optional[float]:
        """R with u0, u1 supported in B_R and f in the cone |x| <= R + t, None if unknown."""
        radii = []
        for field in (self.u0, self.u1):
            if field.support_radius is None:
                return None
            radii.append(field.support_radius)
        if self.f.support_descriptor is None:
            return None
        radii.append(self.f.support_descriptor.R)
        return max(radii)


def gradient_mismatch(field: ScalarField, points, h: float = 1e-6) -> float:
    """
    Largest relative difference between the gradient callback and central differences
    of the value callback at the given points.
    """
    points = _as_points(points, field.dim)
    analytic = field.grad(points)
    numeric = np.empty_like(analytic)
    for i in range(field.dim):
        step = np.zeros(field.dim)
        step[i] = h
        numeric[..., i] = (field(points + step) - field(points - step)) / (2.0 * h)
    scale = np.maximum(np.abs(analytic), 1.0)
    return float(np.max(np.abs(analytic - numeric) / scale))
