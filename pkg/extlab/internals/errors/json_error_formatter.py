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

import json

from extlab.interfaces.error_formatter import ErrorFormatter


class JsonErrorFormatter(ErrorFormatter):
    """
    A JSON object with "command", "kind", "message" and, when the error
    carries them, "details".  Selected by the --json flag.
    """

    def format_error(self, command: str, error: Exception) -> str:
        report: Dict[str, Any] = {
            "command": command,
            "kind": error.__class__.__name__,
            "message": str(error),
        }
        details: Dict[str, Any] = getattr(error, "details", None)
        if details is not None:
            # Complex numbers and numpy scalars become strings
            report["details"] = {key: str(value) for key, value in details.items()}
        return json.dumps(report, sort_keys=True, indent=4)
