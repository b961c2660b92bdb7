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
from typing import List

import logging

from extlab.internals.checks.assert_forwarder import AssertForwarder
from extlab.internals.checks.verdict import Verdict


class VerdictAssertForwarder(AssertForwarder):
    """
    AssertForwarder implementation that never raises.
    Each assert is evaluated and recorded as a Verdict, so that a command
    line run can report every check (passed or failed) in one summary.
    """

    def __init__(self):
        """
        Constructor
        """
        self.verdicts: List[Verdict] = []
        self.logger = logging.getLogger(self.__class__.__name__)

    def get_verdicts(self) -> List[Verdict]:
        """
        :return: The list of verdicts recorded so far
        """
        return self.verdicts

    def all_passed(self) -> bool:
        """
        :return: True if every recorded verdict passed
        """
        return all(verdict.passed for verdict in self.verdicts)

    def record(self, msg: str, relation: str, measured: Any, claimed: Any, passed: bool):
        """
        Records a single verdict.

        :param msg: The description of the check
        :param relation: The comparison that was made
        :param measured: The measured value
        :param claimed: The value it was compared against
        :param passed: Whether the check held
        """
        verdict = Verdict(check=msg, relation=relation, measured=measured,
                          claimed=claimed, passed=bool(passed))
        self.verdicts.append(verdict)
        if not verdict.passed:
            self.logger.warning("Check failed: %s (measured %s %s %s)", msg, measured, relation, claimed)

    def assertTrue(self, expr: Any, msg: str = None):
        self.record(msg, "is", bool(expr), True, bool(expr))

    def assertEqual(self, first: Any, second: Any, msg: str = None):
        self.record(msg, "==", first, second, first == second)

    def assertLessEqual(self, first: Any, second: Any, msg: str = None):
        self.record(msg, "<=", first, second, first <= second)

    def assertGreaterEqual(self, first: Any, second: Any, msg: str = None):
        self.record(msg, ">=", first, second, first >= second)

    def assertAlmostEqual(self, first: Any, second: Any, delta: float, msg: str = None):
        self.record(msg, f"within {delta:g} of", first, second, abs(first - second) <= delta)
