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
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

from extlab.experiments.slope_fit import SlopeFit
from extlab.internals.checks.verdict import Verdict


@dataclass(frozen=True)
class SweepRow:
    """
    One measured quantity at one ε.  Per-probe quantities carry the probe
    index in the id, as in "gamma1_eps_minus_err@p2".
    """

    eps: float
    quantity_id: str
    value: float
    bound: Optional[float]
    slope_window: str


@dataclass
class SweepReport:
    """
    Everything a sweep or example run produced: rows, slope fits and verdicts.
    """

    SCHEMA_VERSION = "1.0"
    CSV_COLUMNS = ("eps", "quantity_id", "value", "bound", "slope_window")

    command: str
    settings: Dict[str, Any] = field(default_factory=dict)
    rows: List[SweepRow] = field(default_factory=list)
    slopes: List[SlopeFit] = field(default_factory=list)
    verdicts: List[Verdict] = field(default_factory=list)
    extras: Dict[str, Any] = field(default_factory=dict)

    def passed(self) -> bool:
        """
        :return: True if every verdict and every slope fit passed
        """
        return all(verdict.passed for verdict in self.verdicts) and all(fit.passed() for fit in self.slopes)

    def failures(self) -> List[str]:
        """
        :return: Descriptions of what failed
        """
        failed: List[str] = [verdict.check for verdict in self.verdicts if not verdict.passed]
        failed.extend(fit.describe() for fit in self.slopes if not fit.passed())
        return failed

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: The JSON summary
        """
        return {
            "schema_version": self.SCHEMA_VERSION,
            "command": self.command,
            "settings": self.settings,
            "passed": self.passed(),
            "row_count": len(self.rows),
            "slopes": [fit.to_dict() for fit in self.slopes],
            "verdicts": [verdict.to_dict() for verdict in self.verdicts],
            "failures": self.failures(),
            "extras": self.extras,
        }
