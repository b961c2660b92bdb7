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

from extlab.internals.checks.unit_test_assert_forwarder import UnitTestAssertForwarder
from extlab.internals.checks.verdict import Verdict
from extlab.internals.checks.verdict_assert_forwarder import VerdictAssertForwarder


class TestAssertForwarders(TestCase):
    """
    Unit tests for the two ways checks are reported.
    """

    def test_verdicts_are_recorded(self):
        """
        Every assert becomes a verdict and none raises.
        """
        forwarder = VerdictAssertForwarder()
        forwarder.assertLessEqual(1.0, 2.0, "small enough")
        forwarder.assertAlmostEqual(1.0, 1.05, 0.1, "close enough")
        self.assertTrue(forwarder.all_passed())
        forwarder.assertGreaterEqual(1.0, 2.0, "large enough")
        forwarder.assertEqual(3, 3, "same")
        forwarder.assertTrue(False, "truthy")
        self.assertFalse(forwarder.all_passed())
        passed = [verdict.passed for verdict in forwarder.get_verdicts()]
        self.assertEqual(passed, [True, True, False, True, False])
        self.assertEqual(forwarder.get_verdicts()[2].relation, ">=")

    def test_verdict_to_dict(self):
        """
        Complex and other values are made JSON-friendly.
        """
        verdict = Verdict(check="unitary", relation="within 1e-10 of", measured=1 + 2j, claimed=(1, 0),
                          passed=False)
        data = verdict.to_dict()
        self.assertEqual(data["measured"], [1.0, 2.0])
        self.assertEqual(data["claimed"], "(1, 0)")
        self.assertFalse(data["passed"])

    def test_unit_test_forwarding(self):
        """
        Passing checks are silent, failing ones raise AssertionError.
        """
        forwarder = UnitTestAssertForwarder(self)
        forwarder.assertLessEqual(1.0, 2.0, "small enough")
        forwarder.assertAlmostEqual(1j, 1j + 1e-12, 1e-9, "complex close enough")
        with self.assertRaises(AssertionError):
            forwarder.assertLessEqual(3.0, 2.0, "too large")
