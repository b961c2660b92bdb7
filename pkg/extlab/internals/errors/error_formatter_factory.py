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

import logging

from extlab.interfaces.error_formatter import ErrorFormatter
from extlab.internals.errors.json_error_formatter import JsonErrorFormatter
from extlab.internals.errors.string_error_formatter import StringErrorFormatter


class ErrorFormatterFactory:
    """
    Factory that creates the ErrorFormatter the command line tools report failures with
    """

    DEFAULT_NAME: str = "string"

    NAME_TO_FORMATTER: Dict[str, Type[ErrorFormatter]] = {
        "string": StringErrorFormatter,
        "text": StringErrorFormatter,
        "json": JsonErrorFormatter,
    }

    @staticmethod
    def create_formatter(name: str = DEFAULT_NAME) -> ErrorFormatter:
        """
        :param name: The formatter name, case-insensitive.  None means the default.
        :return: A new ErrorFormatter instance.  Unknown names get the default.
        """
        use_name: str = ErrorFormatterFactory.DEFAULT_NAME if name is None else str(name).lower()
        formatter_class: Type[ErrorFormatter] = ErrorFormatterFactory.NAME_TO_FORMATTER.get(use_name)
        if formatter_class is None:
            logging.getLogger("ErrorFormatterFactory").warning("Unknown error formatter %r, using %s",
                                                               name, ErrorFormatterFactory.DEFAULT_NAME)
            formatter_class = ErrorFormatterFactory.NAME_TO_FORMATTER.get(ErrorFormatterFactory.DEFAULT_NAME)
        return formatter_class()
