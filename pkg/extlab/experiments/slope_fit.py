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
from dataclasses import asdict
from dataclasses import dataclass
from typing import Any
from typing import Dict


@dataclass(frozen=True)
class SlopeFit:
    """
    A log-log least-squares fit of one quantity against ε and its verdict.

    verdict is one of "pass", "fail", "noise_floor" (the window touched the
    noise floor, so the quantity vanishes identically and passes) and
    "skipped" (fewer than two points).
    """

    quantity_id: str
    expected_order: int
    slope: float
    intercept: float
    stderr: float
    half_width: float
    points: int
    window: str
    verdict: str

    def passed(self) -> bool:
        """
        :return: True unless the verdict is "fail"
        """
        return self.verdict != "fail"

    def describe(self) -> str:
        """
        :return: A one-line summary for failure listings and assertion messages
        """
        return f"slope of {self.quantity_id}: {self.slope:.3f} vs {self.expected_order} ({self.verdict})"

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-friendly dictionary
        """
        return asdict(self)
