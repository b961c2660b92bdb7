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


class ErrorFormatter:
    """
    Interface for turning an exception caught by the command line tools
    into the text written to stderr.
    """

    def format_error(self, command: str, error: Exception) -> str:
        """
        :param command: The sub-command that was running
        :param error: The exception to report.  ExtLabErrors contribute their
                details dictionary; other exceptions only their class and message.
        :return: The text to write
        """
        raise NotImplementedError
