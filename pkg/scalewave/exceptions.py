class ScalewaveError(Exception):
    pass


class ParameterError(ScalewaveError):
    """Equation coefficients outside the supported regime."""


class NegativeCoefficient(ParameterError):
    pass


class NegativeDelta(ParameterError):
    """(mu - 1)^2 - 4 nu^2 < 0; the complex-parameter regime is not supported."""


class NumericError(ScalewaveError):
    pass


class DomainError(NumericError):
    pass


class NoConvergence(NumericError):
    pass


class StepTooLarge(NumericError):
    pass


class CFLViolation(NumericError):
    pass


class DomainTooSmall(NumericError):
    pass


class UnsupportedDimension(NumericError):
    pass


class ConfigError(ScalewaveError):
    pass
