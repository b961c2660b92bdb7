# Copyright (C) 2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# extlab Software in commercial settings.
#
# END COPYRIGHT
from unittest import TestCase

import math

from parameterized import parameterized

from extlab.experiments.slope_fitter import SlopeFitter


class TestSlopeFitter(TestCase):
    """
    Unit tests for log-log slope fits and their verdicts.
    """

    EPS = [1e-1, 1e-2, 1e-3, 1e-4]

    @parameterized.expand([
        ("linear", 1),
        ("quadratic", 2),
    ])
    def test_exact_power_law(self, _name: str, order: int):
        """
        A pure power law fits its exponent exactly.
        """
        values = [3.0 * eps ** order for eps in self.EPS]
        fit = SlopeFitter().fit("quantity", self.EPS, values, order, "0.1:0.0001:4")
        self.assertAlmostEqual(fit.slope, order, places=10)
        self.assertAlmostEqual(math.exp(fit.intercept), 3.0, places=8)
        self.assertEqual(fit.verdict, "pass")
        self.assertEqual(fit.points, 4)
        self.assertTrue(fit.passed())

    def test_wrong_order_fails(self):
        """
        A slope outside the band fails.
        """
        values = [eps ** 2 for eps in self.EPS]
        fit = SlopeFitter(slope_band=0.1).fit("quantity", self.EPS, values, 1, "window")
        self.assertEqual(fit.verdict, "fail")
        self.assertFalse(fit.passed())

    def test_noise_floor(self):
        """
        A window touching the noise floor is not fitted.
        """
        fit = SlopeFitter().fit("quantity", self.EPS, [1e-3, 1e-6, 1e-9, 1e-13], 3, "window")
        self.assertEqual(fit.verdict, "noise_floor")
        self.assertTrue(math.isnan(fit.slope))
        self.assertTrue(fit.passed())

    def test_single_point_skipped(self):
        """
        One point gives no slope.
        """
        fit = SlopeFitter().fit("quantity", [1e-2], [1e-4], 2, "window")
        self.assertEqual(fit.verdict, "skipped")

    def test_two_points_have_no_interval(self):
        """
        The confidence half-width needs a third point.
        """
        fit = SlopeFitter().fit("quantity", [1e-1, 1e-2], [1e-2, 1e-4], 2, "window")
        self.assertEqual(fit.verdict, "pass")
        self.assertTrue(math.isnan(fit.half_width))
