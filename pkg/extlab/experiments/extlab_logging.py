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
from typing import Dict

import os

from leaf_server_common.logging.logging_setup import setup_logging

from extlab.internals.utils.file_of_class import FileOfClass


class ExtLabLogging:
    """
    Common structured logging setup for the extlab command line tools.
    """

    LOG_JSON_ENV: str = "EXTLAB_LOG_JSON"
    LOG_LEVEL_ENV: str = "EXTLAB_LOG_LEVEL"

    def __init__(self, source: str = "extlab"):
        """
        Constructor

        :param source: The source to be used in structured logging messages
        """
        self.source: str = source

    def setup_logging(self, command: str = "None", run_id: str = "None"):
        """
        Set up logging for one command line run.

        :param command: The sub-command being run
        :param run_id: A deterministic id of the run, derived from the seed
        """
        # Make for easy running from the repo
        if os.environ.get(self.LOG_JSON_ENV) is None:
            file_of_class = FileOfClass(__file__, path_to_basis="../deploy")
            os.environ[self.LOG_JSON_ENV] = file_of_class.get_file_in_basis("logging.json")

        extra_logging_defaults: Dict[str, str] = {
            "source": self.source,
            "run_id": run_id,
            "command": command,
        }

        current_dir: str = os.path.dirname(os.path.abspath(__file__))
        setup_logging(self.source, current_dir,
                      self.LOG_JSON_ENV,
                      self.LOG_LEVEL_ENV,
                      extra_logging_defaults)
