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


class ExtLabError(Exception):
    """
    Base class for all domain errors raised by extlab.

    Each error carries a human-readable message and an optional dictionary
    of the numbers that triggered it (residuals, tolerances, ranks...)
    so that the command line tools can report them in a structured way.
    """

    def __init__(self, message: str, details: Dict[str, Any] = None):
        """
        Constructor

        :param message: The message describing the error occurrence
        :param details: An optional dictionary of diagnostic values
        """
        super().__init__(message)
        self.message: str = message
        self.details: Dict[str, Any] = details
