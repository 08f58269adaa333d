import math

import numpy as np

from scalewave.representation import solve, solve_1d, split_huygens
from scalewave.wave_models.fields import CauchyData, ScalarField, SpacetimeField
from scalewave.wave_models.request import EvalRequest
from tests.base import BaseTest, gaussian_integral


class TestSolve1D(BaseTest):

    def test_zero_data(self):
        req = self.request(1.0, 0.3, self.params(2.0, 0.1875))
        self.assertEqual(solve_1d(req), 0.0)

    def test_dalembert(self):
        """mu = nu2 = 0: 1/2 (u0(x+t) + u0(x-t)) + 1/2 integral of u1 over [x-t, x+t]"""
        params = self.params(0.0, 0.0)
        u0 = self.gaussian(1, width=0.7)
        u1 = self.gaussian(1, center=0.3, width=0.5, amplitude=0.5)
        for t in np.linspace(0.1, 3.0, 20):
            for x in np.linspace(-2.0, 2.0, 20):
                u = solve_1d(self.request(t, x, params, u0=u0, u1=u1))
                expected = (0.5 * (math.exp(-(x + t) ** 2 / 0.49) + math.exp(-(x - t) ** 2 / 0.49))
                            + 0.25 * gaussian_integral(x - t, x + t, center=0.3, width=0.5))
                self.assertAlmostEqual(u, expected, delta=1e-10)

    def test_square_initial_value(self):
        params = self.params(0.0, 0.0)
        u0 = ScalarField(dim=1, value=lambda x: np.asarray(x)[..., 0] ** 2)
        self.assertAlmostEqual(solve_1d(self.request(1.0, 0.0, params, u0=u0)), 1.0, places=13)

    def test_delta_one_constant_velocity(self):
        """mu = 2, nu2 = 0, u1 = 1: u = t / (1 + t)"""
        params = self.params(2.0, 0.0)
        for t in (0.5, 1.0, 2.0, 4.0):
            u = solve_1d(self.request(t, 0.4, params, u1=self.constant(1)))
            self.assertAlmostEqual(u, t / (1.0 + t), delta=1e-9)

    def test_constant_source(self):
        """mu = nu2 = 0, f = 1: u = t^2 / 2"""
        params = self.params(0.0, 0.0)
        for t in (0.5, 2.0):
            u = solve_1d(self.request(t, -0.3, params, f=self.constant(1)))
            self.assertAlmostEqual(u, 0.5 * t * t, places=12)

    def test_initial_time(self):
        u0 = self.gaussian(1, center=0.2)
        req = self.request(0.0, 0.5, self.params(2.0, 0.1875), u0=u0, u1=self.constant(1))
        self.assertEqual(solve_1d(req), float(u0(np.array([0.5]))))

    def test_linearity(self):
        params = self.params(2.0, 0.1875)
        u0 = self.gaussian(1, width=0.6)
        u1 = self.gaussian(1, center=-0.4, width=0.9)
        f = self.gaussian(1, center=0.5, width=0.5, amplitude=2.0)
        t, x = 1.3, 0.25
        parts = [
            solve_1d(self.request(t, x, params, u0=u0)),
            solve_1d(self.request(t, x, params, u1=u1)),
            solve_1d(self.request(t, x, params, f=f)),
        ]
        total = solve_1d(self.request(t, x, params, u0=u0, u1=u1, f=f))
        self.assertRelClose(total, sum(parts), 1e-12)

    def test_time_dependent_source(self):
        """mu = nu2 = 0, f = t: u = t^3 / 6"""
        params = self.params(0.0, 0.0)
        f = SpacetimeField(dim=1, value=lambda t, x: np.broadcast_to(t, np.broadcast_shapes(np.shape(t),
                                                                                           np.shape(x)[:-1])))
        data = CauchyData.build(1, f=f)
        u = solve(EvalRequest(t=1.5, x=0.0, data=data, params=params))
        self.assertAlmostEqual(u, 1.5 ** 3 / 6.0, places=12)

    def test_split_sums_to_solution(self):
        req = self.request(1.1, 0.2, self.params(3.0, 1.0), u0=self.gaussian(1), u1=self.gaussian(1, center=0.5),
                           f=self.gaussian(1, width=0.5))
        split = split_huygens(req)
        self.assertAlmostEqual(split.total, solve_1d(req), places=14)
        self.assertAlmostEqual(split.huygens, 0.5 * (1 + 1.1) ** -1.5 * (math.exp(-1.69) + math.exp(-0.81)),
                               places=14)

    def test_wrong_dimension(self):
        req = self.request(1.0, (0.0, 0.0), self.params(0.0, 0.0), dim=2)
        with self.assertRaises(ValueError):
            solve_1d(req)


class TestInitialRecovery(BaseTest):

    def rates(self, dim, x):
        params = self.params(2.0, 0.1875)
        u0 = self.gaussian(dim, width=1.0)
        u1 = self.gaussian(dim, center=0.3, width=1.0, amplitude=0.5)
        point = np.asarray(x)
        u0_x, u1_x = float(u0(point)), float(u1(point))
        value_errors, slope_errors = [], []
        for eps in (1e-2, 5e-3, 2.5e-3):
            u = solve(self.request(eps, x, params, u0=u0, u1=u1, dim=dim))
            value_errors.append(abs(u - u0_x))
            slope_errors.append(abs((u - u0_x) / eps - u1_x))
        return value_errors, slope_errors

    def assertFirstOrder(self, errors):
        for coarse, fine in zip(errors, errors[1:]):
            self.assertGreater(coarse / fine, 1.6)
            self.assertLess(coarse / fine, 2.4)

    def test_one_d(self):
        value_errors, slope_errors = self.rates(1, (0.2,))
        self.assertFirstOrder(value_errors)
        self.assertFirstOrder(slope_errors)

    def test_two_d(self):
        value_errors, slope_errors = self.rates(2, (0.2, 0.0))
        self.assertFirstOrder(value_errors)
        self.assertFirstOrder(slope_errors)

    def test_three_d(self):
        value_errors, slope_errors = self.rates(3, (0.2, 0.0, 0.0))
        self.assertFirstOrder(value_errors)
        self.assertFirstOrder(slope_errors)
