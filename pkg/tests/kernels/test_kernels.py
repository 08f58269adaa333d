import numpy as np

from scalewave.exceptions import DomainError, NegativeCoefficient, NegativeDelta, ParameterError
from scalewave.kernels import (
    closed_form_delta_one,
    evaluate_E,
    kernel_dE_db,
    kernel_dE_dt,
    kernel_dE_dx,
    kernel_dE_dy,
    kernel_E,
    kernel_K0,
    kernel_K1,
    make_point,
    z_arg,
)
from scalewave.wave_models.kernel_point import KernelPoint
from scalewave.wave_models.params import ModelParams
from tests.base import BaseTest, DELTA_CASES


class TestModelParams(BaseTest):

    def test_delta(self):
        p = self.params(2.0, 0.1875)
        self.assertEqual(p.delta, 0.25)
        self.assertEqual(p.sqrt_delta, 0.5)
        self.assertEqual(p.hyp_a, 0.25)
        self.assertTrue(self.params(0.0, 0.0).is_delta_one)

    def test_negative_delta(self):
        with self.assertRaises(NegativeDelta):
            self.params(2.0, 0.5)

    def test_negative_coefficient(self):
        with self.assertRaises(NegativeCoefficient):
            self.params(-1.0, 0.0)
        with self.assertRaises(NegativeCoefficient):
            self.params(1.0, -0.1)

    def test_inconsistent_delta_rejected(self):
        with self.assertRaises(ValueError):
            ModelParams(mu=2.0, nu2=0.0, delta=0.5, sqrt_delta=0.5 ** 0.5)

    def test_immutable(self):
        p = self.params(1.0, 0.0)
        with self.assertRaises(TypeError):
            p.mu = 2.0


class TestKernelValues(BaseTest):

    def test_diagonal(self):
        """E(t, x; t, x) = 2^(r - 1)"""
        for delta in DELTA_CASES:
            params = self.delta_params(delta)
            for t in (0.0, 0.5, 3.0):
                self.assertRelClose(kernel_E(make_point(t, 0.2, t, 0.2), params),
                                    2.0 ** (params.sqrt_delta - 1.0), 1e-12)

    def test_characteristics(self):
        for delta in DELTA_CASES:
            params = self.delta_params(delta)
            mu, r = params.mu, params.sqrt_delta
            t, b = 2.0, 0.5
            expected = 2.0 ** (r - 1.0) * (1.0 + t) ** (-0.5 * mu) * (1.0 + b) ** (0.5 * mu)
            for sign in (1, -1):
                p = KernelPoint.on_characteristic(t, 0.3, b, sign=sign)
                self.assertAlmostEqual(z_arg(p), 0.0, places=14)
                self.assertRelClose(kernel_E(p, params), expected, 1e-12)

    def test_undamped_massless_kernel_is_one(self):
        params = self.params(0.0, 0.0)
        for t, x, b, y in [(1.0, 0.0, 0.0, 0.3), (3.0, -1.0, 1.0, 0.5), (0.5, 0.0, 0.25, 0.0)]:
            p = make_point(t, x, b, y)
            self.assertAlmostEqual(kernel_E(p, params), 1.0, places=14)
            self.assertAlmostEqual(kernel_dE_db(p, params), 0.0, places=14)

    def test_delta_one_closed_forms(self):
        params = self.params(2.0, 0.0)
        for t, x, b, y in [(1.0, 0.0, 0.0, 0.3), (3.0, -1.0, 1.0, 0.5), (2.0, 0.4, 0.5, 1.2)]:
            closed = closed_form_delta_one(t, b, params)
            p = make_point(t, x, b, y)
            self.assertRelClose(kernel_E(p, params), closed.E, 1e-10)
            self.assertRelClose(kernel_dE_db(p, params), closed.dE_db, 1e-10)
        closed = closed_form_delta_one(2.0, 0.0, params)
        self.assertRelClose(float(kernel_K1(2.0, 0.0, 0.5, params)), closed.K1, 1e-10)
        self.assertRelClose(float(kernel_K0(2.0, 0.0, 0.5, params)), closed.K0, 1e-10)
        self.assertRelClose(closed.K0, -1.0 / 3.0, 1e-14)

    def test_closed_form_needs_delta_one(self):
        with self.assertRaises(ParameterError):
            closed_form_delta_one(1.0, 0.0, self.params(2.0, 0.1875))

    def test_z_in_unit_interval(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            t = rng.uniform(0.0, 5.0)
            b = rng.uniform(0.0, t)
            x = rng.uniform(-2.0, 2.0)
            y = x + rng.uniform(-1.0, 1.0) * (t - b)
            z = z_arg(make_point(t, x, b, y))
            self.assertGreaterEqual(z, 0.0)
            self.assertLess(z, 1.0)

    def test_symmetry(self):
        """E(t,x;b,y) = (1+b)^mu (1+t)^(-mu) E(b,y;t,x)"""
        for delta in DELTA_CASES:
            params = self.delta_params(delta)
            t, x, b, y = 2.5, 0.1, 0.7, -0.6
            swapped = evaluate_E(b, y, t, x, params)
            self.assertRelClose(evaluate_E(t, x, b, y, params),
                                (1.0 + b) ** params.mu * (1.0 + t) ** (-params.mu) * swapped, 1e-12)

    def test_vectorized(self):
        params = self.delta_params(0.25)
        y = np.linspace(-0.9, 0.9, 7)
        values = evaluate_E(2.0, 0.0, 1.0, y, params)
        self.assertEqual(values.shape, (7,))
        for yi, v in zip(y, values):
            self.assertRelClose(v, kernel_E(make_point(2.0, 0.0, 1.0, yi), params), 1e-14)


class TestKernelDerivatives(BaseTest):

    def setUp(self) -> None:
        super().setUp()
        self.h = 1e-5
        self.point = (2.0, 0.1, 0.6, 0.5)

    def central(self, f, v):
        return (f(v + self.h) - f(v - self.h)) / (2.0 * self.h)

    def test_derivatives_match_differences(self):
        t, x, b, y = self.point
        for delta in DELTA_CASES:
            params = self.delta_params(delta)
            p = make_point(t, x, b, y)
            np.testing.assert_allclose(kernel_dE_db(p, params),
                                       self.central(lambda v: evaluate_E(t, x, v, y, params), b), rtol=1e-6, atol=1e-10)
            np.testing.assert_allclose(kernel_dE_dt(p, params),
                                       self.central(lambda v: evaluate_E(v, x, b, y, params), t), rtol=1e-6, atol=1e-10)
            np.testing.assert_allclose(kernel_dE_dy(p, params),
                                       self.central(lambda v: evaluate_E(t, x, b, v, params), y), rtol=1e-6, atol=1e-10)
            self.assertEqual(kernel_dE_dx(p, params), -kernel_dE_dy(p, params))

    def test_K0_one_sided_difference(self):
        params = self.params(2.0, 0.1875)
        t, y = 2.0, 0.5
        e = lambda b: evaluate_E(t, 0.0, b, y, params)
        h = self.h
        forward = (-3.0 * e(0.0) + 4.0 * e(h) - e(2.0 * h)) / (2.0 * h)
        self.assertRelClose(float(kernel_K0(t, 0.0, y, params)), -forward, 1e-5)


class TestKernelDomain(BaseTest):

    def test_point_outside_triangle(self):
        with self.assertRaises(DomainError):
            make_point(1.0, 0.0, 0.0, 1.5)
        with self.assertRaises(DomainError):
            make_point(1.0, 0.0, 2.0, 0.0)
        with self.assertRaises(DomainError):
            make_point(1.0, 0.0, -0.1, 0.0)

    def test_array_outside_triangle(self):
        params = self.params(1.0, 0.0)
        with self.assertRaises(DomainError):
            evaluate_E(1.0, 0.0, 0.5, np.array([0.0, 0.9]), params)
        with self.assertRaises(DomainError):
            kernel_K1(-1.0, 0.0, 0.0, params)

    def test_characteristic_within_rounding(self):
        t, x, b = 0.3, 0.1, 0.2
        p = make_point(t, x, b, x + (t - b) * (1.0 + 1e-15))
        self.assertAlmostEqual(z_arg(p), 0.0, places=14)
