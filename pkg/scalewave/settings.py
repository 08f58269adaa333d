import json
import os

SETTINGS_ENV_VAR = "SCALEWAVE_SETTINGS"

DEFAULTS = {
    # hypergeometric layer
    "HYP_TOLERANCE": 1e-13,
    "HYP_MAX_TERMS": 10000,
    "HYP_Z_SWITCH": 0.75,  # series below, z -> 1 connection formula above
    "HYP_LOG_CASE_TOLERANCE": 1e-9,
    # c - a - b this close to an integer is summed by the defining series
    "HYP_NEAR_LOG_BAND": 1e-3,
    # finite-difference residual checks need E below the rounding level of a second difference
    "HYP_RESIDUAL_TOLERANCE": 1e-16,
    # kernel domain checks admit quadrature nodes on the characteristic within rounding
    "KERNEL_DOMAIN_SLACK": 1e-12,
    # quadrature defaults, copied into QuadratureConfig at construction
    "INTERVAL_ORDER": 16,
    "INTERVAL_PANELS": 8,
    "SPHERE_POLAR_ORDER": 16,
    "SPHERE_AZIMUTH_ORDER": 32,
    "BALL_RADIAL_ORDER": 24,
    "BALL_ANGULAR_ORDER": 48,
    "T_DERIVATIVE_STEP": 1e-4,
    # support / Huygens contracts
    "SUPPORT_TOLERANCE": 1e-8,
    "HUYGENS_TOLERANCE": 1e-6,
    # output
    "CSV_SIGNIFICANT_DIGITS": 17,
    "LOG_LEVEL": "WARNING",
}


def _load_user_settings():
    path = os.environ.get(SETTINGS_ENV_VAR)
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


class ScalewaveSettings:
    def __init__(self, user_settings=None, defaults=None):
        if user_settings is not None:
            self._user_settings = user_settings
        self.defaults = defaults or DEFAULTS
        self._cached_attrs = set()

    @property
    def user_settings(self):
        if not hasattr(self, "_user_settings"):
            self._user_settings = _load_user_settings()
        return self._user_settings

    def __getattr__(self, attr):
        # check the setting is accepted
        if attr not in self.defaults:
            raise AttributeError(f"Invalid SCALEWAVE setting: {attr}")

        # get from user settings or default value
        try:
            val = self.user_settings[attr]
        except KeyError:
            val = self.defaults[attr]

        self._cached_attrs.add(attr)
        setattr(self, attr, val)
        return val

    def reload(self, user_settings=None):
        for attr in self._cached_attrs:
            delattr(self, attr)
        self._cached_attrs.clear()
        if hasattr(self, "_user_settings"):
            delattr(self, "_user_settings")
        if user_settings is not None:
            self._user_settings = user_settings


scalewave_settings = ScalewaveSettings()
