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

import logging

from pydantic import ValidationError

from leaf_common.config.dictionary_overlay import DictionaryOverlay
from leaf_common.parsers.dictionary_extractor import DictionaryExtractor

from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_config_restorer import SweepConfigRestorer
from extlab.internals.errors.config_error import ConfigError


class SweepConfigFactory:
    """
    Assembles a SweepConfig from shipped defaults, an optional user config file
    and command line overrides, in increasing order of precedence.
    """

    @staticmethod
    def create_config(config_file: str = None, overrides: Dict[str, Any] = None) -> SweepConfig:
        """
        :param config_file: Optional path to a .hocon or .json config file
        :param overrides: Optional nested dictionary of values from the command line
        :return: The validated SweepConfig
        :raises ConfigError: on parse or validation failure
        """
        restorer = SweepConfigRestorer()
        overlay = DictionaryOverlay()

        merged: Dict[str, Any] = restorer.restore()
        if config_file is not None:
            merged = overlay.overlay(merged, restorer.restore(config_file))
        if overrides:
            merged = overlay.overlay(merged, overrides)

        extractor = DictionaryExtractor(merged)
        logging.getLogger("SweepConfigFactory").debug("Config: model=%s extension=%s eps=%s",
                                                      extractor.get("model"), extractor.get("extension"),
                                                      extractor.get("eps"))
        try:
            return SweepConfig.model_validate(merged)
        except ValidationError as exception:
            raise ConfigError("Invalid configuration", {"errors": str(exception)}) from exception

    @staticmethod
    def parse_eps(eps_spec: str) -> Dict[str, Any]:
        """
        :param eps_spec: A "start:stop:count" string
        :return: The eps dictionary for an override
        """
        parts = str(eps_spec).split(":")
        if len(parts) != 3:
            raise ConfigError(f"--eps must look like start:stop:count, got {eps_spec!r}")
        try:
            return {"start": float(parts[0]), "stop": float(parts[1]), "count": int(parts[2])}
        except ValueError as exception:
            raise ConfigError(f"--eps has a non-numeric part: {eps_spec!r}") from exception
