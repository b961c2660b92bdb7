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
from unittest import TestCase

from extlab.exppoly.exp_poly import ExpPoly
from extlab.models.hilbert_element import HilbertElement
from extlab.models.hilbert_element_dictionary_converter import HilbertElementDictionaryConverter


class TestHilbertElementDictionaryConverter(TestCase):
    """
    Unit tests for the data-only form of HilbertElement.
    """

    def test_channels(self):
        """
        One ExpPoly dictionary per channel, in channel order, and back.
        """
        converter = HilbertElementDictionaryConverter()
        element = HilbertElement([ExpPoly(), ExpPoly.monomial(2.0j, 1, 1.5)])
        converted = converter.to_dict(element)
        self.assertEqual(converted, {"channels": [{"terms": []},
                                                  {"terms": [{"re_coeff": 0.0, "im_coeff": 2.0, "power": 1,
                                                              "re_rate": 1.5, "im_rate": 0.0}]}]})
        restored = converter.from_dict(converted)
        self.assertEqual(restored.channel_count(), 2)
        self.assertTrue((restored - element).is_zero())

    def test_none(self):
        """
        None converts to None both ways.
        """
        converter = HilbertElementDictionaryConverter()
        self.assertIsNone(converter.to_dict(None))
        self.assertIsNone(converter.from_dict(None))
