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
from typing import Callable
from typing import Dict

from extlab.interfaces.extension import Extension
from extlab.interfaces.model import Model
from extlab.internals.errors.config_error import ConfigError
from extlab.internals.errors.extlab_error import ExtLabError
from extlab.models.friedrichs_extension import FriedrichsExtension
from extlab.models.salpha_extension import SAlphaExtension


class ExtensionFactory:
    """
    Factory that creates Extensions from specs of the form "name" or "name:argument",
    e.g. "friedrichs" or "salpha:-1.5".
    """

    NAME_TO_EXTENSION: Dict[str, Callable[[Model, str], Extension]] = {
        "friedrichs": lambda model, argument: FriedrichsExtension(model),
        "salpha": lambda model, argument: SAlphaExtension(float(argument), model),
    }

    @staticmethod
    def create_extension(spec: str, model: Model) -> Extension:
        """
        :param spec: The extension spec string
        :param model: The host model
        :return: A new Extension on the model
        :raises ConfigError: for an unknown name, a bad argument or a model the extension does not fit
        """
        name, _, argument = str(spec).partition(":")
        constructor = ExtensionFactory.NAME_TO_EXTENSION.get(name.strip().lower())
        if constructor is None:
            raise ConfigError(f"Unknown extension '{spec}'",
                              {"known": sorted(ExtensionFactory.NAME_TO_EXTENSION.keys())})

        try:
            return constructor(model, argument.strip())
        except ValueError as exception:
            raise ConfigError(f"Bad argument in extension spec '{spec}'", {"reason": str(exception)}) from exception
        except ExtLabError as exception:
            raise ConfigError(f"Extension '{spec}' does not fit model {model.get_name()}",
                              {"reason": exception.message}) from exception
