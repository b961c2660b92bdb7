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
from dataclasses import replace
from unittest import TestCase

import pytest

from extlab.experiments.convergence_sweep import ConvergenceSweep
from extlab.experiments.example_one import ExampleOne
from extlab.experiments.example_two import ExampleTwo
from extlab.experiments.self_test import SelfTest
from extlab.experiments.slope_fit import SlopeFit
from extlab.experiments.sweep_config_factory import SweepConfigFactory
from extlab.experiments.sweep_report import SweepReport
from extlab.internals.checks.unit_test_assert_forwarder import UnitTestAssertForwarder
from extlab.internals.checks.verdict_assert_forwarder import VerdictAssertForwarder


class TestExperimentRuns(TestCase):
    """
    Runs the experiments with every check forwarded to this TestCase.
    """

    def setUp(self):
        self.asserts = UnitTestAssertForwarder(self)

    @pytest.mark.integration
    def test_halfline_sweep(self):
        """
        Every bound and identity of the Friedrichs sweep holds.
        """
        config = SweepConfigFactory.create_config(overrides={"probes": 2})
        report = ConvergenceSweep(config, self.asserts).run()
        self.assertGreater(len(report.rows), 0)
        gaps = [fit for fit in report.slopes if fit.quantity_id == "projection_gap_minus"]
        self.assertEqual(len(gaps), 1)
        self.assertEqual(gaps[0].verdict, "pass")
        self.assertEqual(report.verdicts, [])

        fitted = {ConvergenceSweep.base_quantity(fit.quantity_id) for fit in report.slopes}
        expected = {name for name, order in ConvergenceSweep.QUANTITIES.items() if order is not None}
        self.assertEqual(fitted, expected)
        for fit in report.slopes:
            self.assertTrue(fit.passed(), fit.describe())
            order = ConvergenceSweep.QUANTITIES[ConvergenceSweep.base_quantity(fit.quantity_id)]
            self.assertEqual(fit.expected_order, order)

        # seven ε-families per element
        extrapolated = report.extras["extrapolated"]
        self.assertEqual(len(extrapolated), 7 * 2)
        for result in extrapolated:
            self.assertLessEqual(result["error"], result["tolerance"], result["quantity_id"])

    @pytest.mark.integration
    def test_salpha_sweep_records_verdicts(self):
        """
        With the default forwarder the verdicts land in the report.
        """
        config = SweepConfigFactory.create_config(overrides={"model": "twohalflines", "extension": "salpha:-1",
                                                             "probes": 2, "eps": {"count": 4}})
        report = ConvergenceSweep(config).run()
        self.assertGreater(len(report.verdicts), 0)
        self.assertTrue(all(verdict.passed for verdict in report.verdicts))

    @pytest.mark.integration
    def test_example_one(self):
        """
        The closed forms of the Friedrichs example.
        """
        report = ExampleOne(asserts=self.asserts).run()
        self.assertEqual(report.command, "example1")
        self.assertIn("kvb", report.extras)

    @pytest.mark.integration
    def test_example_two(self):
        """
        The point interactions for two couplings.
        """
        config = SweepConfigFactory.create_config(overrides={"alphas": [-1.0, 2.0], "probes": 3})
        report = ExampleTwo(config, self.asserts).run()
        self.assertEqual(report.command, "example2")

    @pytest.mark.integration
    def test_self_test(self):
        """
        All oracle suites with a reduced quadrature sample.
        """
        forwarder = VerdictAssertForwarder()
        report = SelfTest(asserts=forwarder, pairs=20).run()
        self.assertTrue(forwarder.all_passed(), report.failures())
        self.assertGreater(report.extras["fixtures"], 0)

    @pytest.mark.integration
    def test_wrong_limit_is_caught(self):
        """
        An ε = 0 target that the families do not converge to fails the extrapolation check.
        """
        config = SweepConfigFactory.create_config(overrides={"probes": 1})
        sweep = ConvergenceSweep(config)
        reference = sweep.reference(sweep.make_probes()[0])
        shifted = replace(reference, regular=reference.regular + reference.element)

        forwarder = VerdictAssertForwarder()
        report = SweepReport(command="sweep")
        sweep.check_limits([shifted], report, forwarder)
        failed = {verdict.check for verdict in forwarder.get_verdicts() if not verdict.passed}
        self.assertIn("f_eps_limit@p0 against its ε = 0 target", failed)
        self.assertIn("s_f_eps_limit@p0 against its ε = 0 target", failed)
        self.assertNotIn("gamma1_eps_minus_limit@p0 against its ε = 0 target", failed)

    def test_slope_description(self):
        """
        Failure listings and assertion messages share one format.
        """
        fit = SlopeFit(quantity_id="upsilon_err@p1", expected_order=2, slope=1.04, intercept=0.0, stderr=0.01,
                       half_width=0.25, points=6, window="[1e-4, 1e-1]", verdict="fail")
        self.assertEqual(fit.describe(), "slope of upsilon_err@p1: 1.040 vs 2 (fail)")
