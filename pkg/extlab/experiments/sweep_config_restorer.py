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

from pathlib import Path

from pyparsing.exceptions import ParseException
from pyparsing.exceptions import ParseSyntaxException

from leaf_common.persistence.easy.easy_hocon_persistence import EasyHoconPersistence
from leaf_common.persistence.interface.restorer import Restorer

from extlab.internals.errors.config_error import ConfigError
from extlab.internals.utils.file_of_class import FileOfClass


class SweepConfigRestorer(Restorer):
    """
    Implementation of the Restorer interface to read in a sweep config
    dictionary given a hocon or json file name.
    """

    def restore(self, file_reference: str = None) -> Dict[str, Any]:
        """
        :param file_reference: The file reference to use when restoring.
                Default is None, implying the shipped defaults.
        :return: The config dictionary
        """
        config: Dict[str, Any] = None

        use_file: str = file_reference
        if file_reference is None or len(file_reference) == 0:
            # Read from the default
            file_of_class = FileOfClass(__file__)
            use_file = file_of_class.get_file_in_basis("default_sweep_config.hocon")

        try:
            if use_file.endswith(".json"):
                with Path(use_file).open("r", encoding="utf-8") as json_file:
                    config = json.load(json_file)
            elif use_file.endswith(".hocon") or use_file.endswith(".conf"):
                hocon = EasyHoconPersistence(full_ref=use_file, must_exist=True)
                config = hocon.restore()
            else:
                raise ConfigError(f"Config file {use_file} must be a .json, .hocon or .conf file")
        except (ParseException, ParseSyntaxException, json.decoder.JSONDecodeError) as exception:
            message = f"""
There was an error parsing the config file "{use_file}".
See the accompanying exception for clues as to what might be
syntactically incorrect in that file.
"""
            raise ConfigError(message, {"cause": str(exception)}) from exception
        except (FileNotFoundError, OSError) as exception:
            raise ConfigError(f"Could not read config file {use_file}", {"cause": str(exception)}) from exception

        if not isinstance(config, dict):
            raise ConfigError(f"Config file {use_file} does not hold a dictionary")
        return config
