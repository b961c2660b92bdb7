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
from typing import Dict

from dataclasses import asdict
from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of one check: the inequality (or identity) that was tested,
    the measured and claimed values, and whether it held.
    """

    check: str
    relation: str
    measured: Any
    claimed: Any
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A JSON-friendly dictionary of this verdict
        """
        verdict_dict: Dict[str, Any] = asdict(self)
        for key in ("measured", "claimed"):
            value: Any = verdict_dict.get(key)
            if isinstance(value, complex):
                verdict_dict[key] = [value.real, value.imag]
            elif value is not None and not isinstance(value, (bool, int, float, str)):
                verdict_dict[key] = f"{value}"
        return verdict_dict
