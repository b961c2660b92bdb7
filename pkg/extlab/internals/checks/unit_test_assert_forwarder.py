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
from typing import Any

from unittest import TestCase

from extlab.internals.checks.assert_forwarder import AssertForwarder


class UnitTestAssertForwarder(AssertForwarder):
    """
    AssertForwarder implementation for python unittest.TestCase
    """

    def __init__(self, test_case: TestCase):
        """
        Constructor

        :param test_case: The python unitest.TestCase instance on which to base any asserts.
        """
        self.test_case: TestCase = test_case

    def assertTrue(self, expr: Any, msg: str = None):
        self.test_case.assertTrue(expr, msg=msg)

    def assertEqual(self, first: Any, second: Any, msg: str = None):
        self.test_case.assertEqual(first, second, msg=msg)

    def assertLessEqual(self, first: Any, second: Any, msg: str = None):
        self.test_case.assertLessEqual(first, second, msg=msg)

    def assertGreaterEqual(self, first: Any, second: Any, msg: str = None):
        self.test_case.assertGreaterEqual(first, second, msg=msg)

    def assertAlmostEqual(self, first: Any, second: Any, delta: float, msg: str = None):
        # TestCase.assertAlmostEqual needs abs() of the difference, which complex supports
        self.test_case.assertAlmostEqual(first, second, delta=delta, msg=msg)
