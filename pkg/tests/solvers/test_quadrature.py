import math

import numpy as np

from scalewave.quadrature import (
    ball_integral_scaled,
    ball_weighted_mean,
    integrate_interval,
    integrate_nested,
    interval_rule,
    sphere_mean,
    sphere_mean_dr,
)
from scalewave.settings import scalewave_settings
from scalewave.wave_models.fields import ScalarField
from scalewave.wave_models.quadrature import QuadratureConfig
from tests.base import BaseTest


class TestIntervalRules(BaseTest):

    def setUp(self) -> None:
        super().setUp()
        self.cfg = QuadratureConfig()

    def test_polynomial_exactness(self):
        for degree in (0, 1, 5, 31):
            value = integrate_interval(lambda x: x ** degree, 0.0, 1.0, self.cfg)
            self.assertAlmostEqual(value, 1.0 / (degree + 1), places=14)

    def test_smooth_integrand(self):
        self.assertAlmostEqual(integrate_interval(np.cos, 0.0, np.pi / 2, self.cfg), 1.0, places=14)

    def test_degenerate_interval(self):
        self.assertEqual(integrate_interval(np.exp, 0.7, 0.7, self.cfg), 0.0)

    def test_batched_rule(self):
        x, w = interval_rule(np.zeros(3), np.array([1.0, 2.0, 3.0]), self.cfg)
        n = self.cfg.interval_order * self.cfg.interval_panels
        self.assertEqual(x.shape, (3, n))
        np.testing.assert_allclose(w.sum(axis=-1), [1.0, 2.0, 3.0], rtol=1e-14)

    def test_nested_triangle(self):
        """Area of {0 <= b <= t, |y - x| <= t - b} is t^2."""
        t, x = 1.5, 0.2
        area = integrate_nested(lambda b, y: np.ones(np.broadcast(b, y).shape), 0.0, t,
                                lambda b: x - t + b, lambda b: x + t - b, self.cfg)
        self.assertAlmostEqual(area, t * t, places=13)

    def test_rule_tracks_settings(self):
        scalewave_settings.reload({"INTERVAL_PANELS": 2})
        self.assertEqual(QuadratureConfig().interval_panels, 2)
        scalewave_settings.reload()
        self.assertEqual(QuadratureConfig().interval_panels, 8)

    def test_panel_doubling_order(self):
        """x^2.5 has a singular third derivative at 0; the first panel sets an error of order h^3.5"""
        exact = 1.0 / 3.5
        errors = []
        for panels in (1, 2, 4, 8):
            cfg = QuadratureConfig(interval_order=4, interval_panels=panels)
            errors.append(abs(integrate_interval(lambda x: x ** 2.5, 0.0, 1.0, cfg) - exact))
        for coarse, fine in zip(errors, errors[1:]):
            self.assertGreater(fine, 1e-13)
            self.assertGreater(coarse / fine, 4.0)

    def test_refined(self):
        fine = self.cfg.refined(2)
        self.assertEqual(fine.interval_panels, 2 * self.cfg.interval_panels)
        self.assertEqual(fine.sphere_polar, 2 * self.cfg.sphere_polar)
        self.assertEqual(fine.t_derivative_step, self.cfg.t_derivative_step)


class TestSphereMeans(BaseTest):

    def setUp(self) -> None:
        super().setUp()
        self.cfg = QuadratureConfig()

    def test_constant(self):
        self.assertAlmostEqual(sphere_mean(self.constant(3, 2.5), (0.1, 0.2, 0.3), 1.7, self.cfg), 2.5, places=14)

    def test_square_norm(self):
        """mean of |z|^2 over S_r(x) is |x|^2 + r^2"""
        x = np.array([0.3, -0.4, 1.2])
        for r in (0.5, 2.0):
            expected = float(x @ x) + r * r
            self.assertAlmostEqual(sphere_mean(self.square_norm(3), x, r, self.cfg), expected, places=12)

    def test_single_coordinate(self):
        phi = ScalarField(dim=3, value=lambda z: np.asarray(z)[..., 2] ** 2)
        self.assertAlmostEqual(sphere_mean(phi, (0.0, 0.0, 0.0), 1.5, self.cfg), 1.5 ** 2 / 3.0, places=14)

    def test_radius_derivative(self):
        x = np.array([0.3, -0.4, 1.2])
        self.assertAlmostEqual(sphere_mean_dr(self.square_norm(3), x, 0.8, self.cfg), 1.6, places=12)

    def test_array_radii(self):
        r = np.array([0.5, 1.0, 2.0])
        out = sphere_mean(self.square_norm(3), (0.0, 0.0, 0.0), r, self.cfg)
        np.testing.assert_allclose(out, r ** 2, rtol=1e-13)

    def test_negative_radius(self):
        phi = self.gaussian(3, center=[0.2, 0.0, 0.1])
        x = (0.1, 0.3, -0.2)
        self.assertAlmostEqual(sphere_mean(phi, x, -0.7, self.cfg), sphere_mean(phi, x, 0.7, self.cfg), places=14)

    def test_wrong_dimension(self):
        with self.assertRaises(ValueError):
            sphere_mean(self.constant(2), (0.0, 0.0), 1.0, self.cfg)

    def test_rotation_invariance(self):
        rotation, _ = np.linalg.qr(np.random.default_rng(5).normal(size=(3, 3)))
        phi = self.gaussian(3, center=[0.3, 0.0, 0.1], width=1.0)
        rotated = ScalarField(dim=3, value=lambda z: phi.value(np.asarray(z) @ rotation.T))
        cfg = self.cfg.refined(2)
        x = np.array([0.2, -0.5, 0.4])
        self.assertRelClose(sphere_mean(rotated, x, 0.8, cfg), sphere_mean(phi, rotation @ x, 0.8, cfg), 1e-10)


class TestBallMeans(BaseTest):

    def setUp(self) -> None:
        super().setUp()
        self.cfg = QuadratureConfig()

    def test_constant(self):
        """(1 / pi r^2) integral over B_r of (r^2 - |z - x|^2)^(-1/2) is 2 / r"""
        for r in (0.5, 1.0, 3.0):
            self.assertAlmostEqual(ball_weighted_mean(self.constant(2), (0.4, -0.1), r, self.cfg), 2.0 / r,
                                   places=13)

    def test_square_distance(self):
        """weighted mean of |z - x|^2 is 4r / 3"""
        x = np.array([0.4, -0.1])
        phi = ScalarField(dim=2, value=lambda z: np.sum((np.asarray(z) - x) ** 2, axis=-1))
        self.assertAlmostEqual(ball_weighted_mean(phi, x, 1.5, self.cfg), 2.0, places=13)

    def test_scaled_integral_is_even(self):
        phi = self.gaussian(2, center=[0.3, 0.1])
        self.assertAlmostEqual(ball_integral_scaled(phi, (0.0, 0.2), -0.9, self.cfg),
                               ball_integral_scaled(phi, (0.0, 0.2), 0.9, self.cfg), places=14)

    def test_nonpositive_radius(self):
        with self.assertRaises(ValueError):
            ball_weighted_mean(self.constant(2), (0.0, 0.0), 0.0, self.cfg)

    def test_radial_order(self):
        """weighted mean of |z|^(1/2) over the unit disk is Gamma(5/4) Gamma(1/2) / Gamma(7/4)"""
        phi = ScalarField(dim=2, value=lambda z: np.sum(np.asarray(z) ** 2, axis=-1) ** 0.25)
        exact = math.gamma(1.25) * math.gamma(0.5) / math.gamma(1.75)
        errors = []
        for radial in (4, 8, 16, 32):
            cfg = QuadratureConfig(ball_radial=radial, ball_angular=4)
            errors.append(abs(ball_weighted_mean(phi, (0.0, 0.0), 1.0, cfg) - exact))
        for coarse, fine in zip(errors, errors[1:]):
            self.assertGreater(coarse / fine, 4.0)
        self.assertLess(errors[-1], 1e-6)
