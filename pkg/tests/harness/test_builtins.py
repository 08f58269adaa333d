import numpy as np

from scalewave.exceptions import ConfigError
from scalewave.harness.builtins import build_field
from scalewave.wave_models.fields import gradient_mismatch
from scalewave.wave_models.run_config import BumpSpec, ConstantSpec, GaussianSpec, SineSpec
from tests.base import BaseTest

SPECS = [
    GaussianSpec(center=0.2, width=0.7, amplitude=1.5),
    SineSpec(k=2.0),
    BumpSpec(R=1.0),
    ConstantSpec(c=3.0),
]


class TestBuiltinGradients(BaseTest):

    def points(self, dim):
        rng = np.random.default_rng(11)
        directions = rng.normal(size=(40, dim))
        directions /= np.linalg.norm(directions, axis=-1, keepdims=True)
        return directions * rng.uniform(0.0, 0.8, size=(40, 1))

    def test_gradients_match_values(self):
        for dim in (1, 2, 3):
            for spec in SPECS:
                field = build_field(spec, dim)
                self.assertLess(gradient_mismatch(field, self.points(dim)), 1e-6, f"{spec.family} dim={dim}")

    def test_mismatch_detects_wrong_gradient(self):
        field = build_field(GaussianSpec(width=0.7), 2)
        wrong = field.copy(update={'gradient': lambda x: 2.0 * field.grad(x)})
        self.assertGreater(gradient_mismatch(wrong, self.points(2)), 1e-2)

    def test_gaussian_center_dimension(self):
        with self.assertRaises(ConfigError):
            build_field(GaussianSpec(center=[0.0, 1.0]), 3)
