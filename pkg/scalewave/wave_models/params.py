import math

from pydantic import BaseModel, root_validator

from ..exceptions import NegativeCoefficient, NegativeDelta


def compute_delta(mu: float, nu2: float) -> float:
    """delta = (mu - 1)^2 - 4 nu^2, always evaluated in this order."""
    return (mu - 1.0) ** 2 - 4.0 * nu2


class ModelParams(BaseModel):
    """Coefficients of u_tt - Δu + mu/(1+t) u_t + nu^2/(1+t)^2 u = f and the derived delta."""
    mu: float
    nu2: float
    delta: float
    sqrt_delta: float

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check_derived(cls, values):
        mu, nu2 = values["mu"], values["nu2"]
        if mu < 0 or nu2 < 0:
            raise ValueError("mu and nu2 must be nonnegative")
        if values["delta"] != compute_delta(mu, nu2):
            raise ValueError("delta does not match (mu - 1)^2 - 4 nu2")
        if values["delta"] < 0:
            raise ValueError("delta must be nonnegative")
        return values

    @property
    def hyp_a(self) -> float:
        """First (and second) hypergeometric parameter (1 - sqrt(delta)) / 2."""
        return 0.5 * (1.0 - self.sqrt_delta)

    @property
    def is_delta_one(self) -> bool:
        return self.delta == 1.0


def make_params(mu: float, nu2: float) -> ModelParams:
    """
    Build validated ModelParams from the damping and mass coefficients.

    :param float mu: damping coefficient, >= 0
    :param float nu2: mass coefficient nu^2, >= 0
    :raises NegativeCoefficient: mu < 0 or nu2 < 0
    :raises NegativeDelta: delta < 0
    """
    mu = float(mu)
    nu2 = float(nu2)
    if mu < 0 or nu2 < 0:
        raise NegativeCoefficient(f"mu and nu2 must be nonnegative, got mu={mu}, nu2={nu2}")

    delta = compute_delta(mu, nu2)
    if delta < 0:
        raise NegativeDelta(f"delta = (mu-1)^2 - 4 nu2 = {delta} < 0 for mu={mu}, nu2={nu2}")

    return ModelParams(mu=mu, nu2=nu2, delta=delta, sqrt_delta=math.sqrt(delta))
