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

from extlab.interfaces.error_formatter import ErrorFormatter


class StringErrorFormatter(ErrorFormatter):
    """
    One line of text, e.g.

        sweep: NotUnitary: Reconstructed U is not unitary (residual=0.003, tolerance=1e-07)
    """

    def format_error(self, command: str, error: Exception) -> str:
        details: Dict[str, Any] = getattr(error, "details", None)
        line: str = f"{command}: {error.__class__.__name__}: {error}"
        if details:
            pairs: str = ", ".join(f"{key}={value}" for key, value in sorted(details.items()))
            line = f"{line} ({pairs})"
        return line
