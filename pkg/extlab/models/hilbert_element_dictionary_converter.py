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
from typing import List

from leaf_common.serialization.interface.dictionary_converter import DictionaryConverter

from extlab.exppoly.exp_poly_dictionary_converter import ExpPolyDictionaryConverter
from extlab.models.hilbert_element import HilbertElement


class HilbertElementDictionaryConverter(DictionaryConverter):
    """
    DictionaryConverter implementation for HilbertElement.

    The data-only form is {"channels": [{"terms": [records]}, ...]}, one
    ExpPoly dictionary per channel in channel order.
    """

    def __init__(self):
        """
        Constructor
        """
        self.channel_converter = ExpPolyDictionaryConverter()

    def to_dict(self, obj: HilbertElement) -> Dict[str, Any]:
        """
        :param obj: The HilbertElement to be converted into a dictionary
        :return: A data-only dictionary, or None if obj is None
        """
        if obj is None:
            return None
        return {"channels": [self.channel_converter.to_dict(channel) for channel in obj.get_channels()]}

    def from_dict(self, obj_dict: Dict[str, Any]) -> HilbertElement:
        """
        :param obj_dict: The data-only dictionary to be converted into an object
        :return: The HilbertElement it describes, or None if obj_dict is None
        """
        if obj_dict is None:
            return None
        return HilbertElement([self.channel_converter.from_dict(channel)
                               for channel in obj_dict.get("channels", [])])

    def to_dict_list(self, elements: List[HilbertElement]) -> List[Dict[str, Any]]:
        """
        :param elements: A list of elements, e.g. a basis
        :return: Their dictionaries in the same order
        """
        return [self.to_dict(element) for element in elements]
