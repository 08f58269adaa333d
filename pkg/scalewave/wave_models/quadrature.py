from pydantic import BaseModel, Field, root_validator

from ..settings import scalewave_settings


def _setting(name):
    return lambda: getattr(scalewave_settings, name)


class QuadratureConfig(BaseModel):
    """
    Resolution of every quadrature rule.

    interval: Gauss-Legendre nodes per panel x panels.
    sphere: Gauss-Legendre in cos(theta) x trapezoid in azimuth.
    ball: Gauss-Legendre in theta (rho = r sin(theta)) x trapezoid in azimuth.
    """
    interval_order: int = Field(default_factory=_setting("INTERVAL_ORDER"))
    interval_panels: int = Field(default_factory=_setting("INTERVAL_PANELS"))
    sphere_polar: int = Field(default_factory=_setting("SPHERE_POLAR_ORDER"))
    sphere_azimuth: int = Field(default_factory=_setting("SPHERE_AZIMUTH_ORDER"))
    ball_radial: int = Field(default_factory=_setting("BALL_RADIAL_ORDER"))
    ball_angular: int = Field(default_factory=_setting("BALL_ANGULAR_ORDER"))
    t_derivative_step: float = Field(default_factory=_setting("T_DERIVATIVE_STEP"))

    class Config:
        allow_mutation = False
        extra = "forbid"

    @root_validator(skip_on_failure=True)
    def _check(cls, values):
        if values["interval_order"] < 2:
            raise ValueError("interval_order must be >= 2")
        for name in ("interval_panels", "sphere_polar", "sphere_azimuth", "ball_radial", "ball_angular"):
            if values[name] < 1:
                raise ValueError(f"{name} must be positive")
        if not 0.0 < values["t_derivative_step"] < 1e-1:
            raise ValueError("t_derivative_step must lie in (0, 0.1)")
        return values

    def refined(self, factor: int = 2) -> "QuadratureConfig":
        """Every resolution multiplied by ``factor``; the derivative step is unchanged."""
        return QuadratureConfig(
            interval_order=self.interval_order,
            interval_panels=self.interval_panels * factor,
            sphere_polar=self.sphere_polar * factor,
            sphere_azimuth=self.sphere_azimuth * factor,
            ball_radial=self.ball_radial * factor,
            ball_angular=self.ball_angular * factor,
            t_derivative_step=self.t_derivative_step,
        )
