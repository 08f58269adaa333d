from pydantic import BaseModel, root_validator

from ..settings import scalewave_settings


class KernelPoint(BaseModel):
    """
    Kernel coordinates (t, x; b, y) inside the backward characteristic triangle:
    0 <= b <= t and |y - x| <= t - b.
    """
    t: float
    x: float
    b: float
    y: float

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check_triangle(cls, values):
        t, x, b, y = values["t"], values["x"], values["b"], values["y"]
        if not 0.0 <= b <= t:
            raise ValueError(f"need 0 <= b <= t, got b={b}, t={t}")
        slack = scalewave_settings.KERNEL_DOMAIN_SLACK
        if abs(y - x) > (t - b) * (1.0 + slack) + slack * max(1.0, abs(x), abs(y)):
            raise ValueError(f"|y - x| = {abs(y - x)} exceeds t - b = {t - b}")
        return values

    @classmethod
    def on_characteristic(cls, t: float, x: float, b: float, sign: int = 1) -> "KernelPoint":
        """The point y = x ± (t - b) on the boundary of the triangle."""
        return cls(t=t, x=x, b=b, y=x + sign * (t - b))
