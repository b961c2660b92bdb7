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
from typing import Type

from extlab.interfaces.model import Model
from extlab.internals.errors.config_error import ConfigError
from extlab.models.halfline_model import HalfLineModel
from extlab.models.two_half_lines_model import TwoHalfLinesModel


class ModelFactory:
    """
    Factory that creates Models by name
    """

    NAME_TO_MODEL: Dict[str, Type[Model]] = {
        "halfline": HalfLineModel,
        "twohalflines": TwoHalfLinesModel,
    }

    @staticmethod
    def create_model(name: str) -> Model:
        """
        :param name: The model name
        :return: A new Model instance
        :raises ConfigError: for an unknown name
        """
        model_class: Type[Model] = ModelFactory.NAME_TO_MODEL.get(str(name).lower())
        if model_class is None:
            raise ConfigError(f"Unknown model '{name}'", {"known": sorted(ModelFactory.NAME_TO_MODEL.keys())})
        return model_class()
