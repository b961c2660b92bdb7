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
from extlab.exppoly.exp_poly_dictionary_converter import ExpPolyDictionaryConverter


class TestExpPolyDictionaryConverter(TestCase):
    """
    Unit tests for the data-only form of ExpPoly.
    """

    def test_records(self):
        """
        Each term becomes one {re_coeff, im_coeff, power, re_rate, im_rate} record.
        """
        function = ExpPoly.monomial(1.0 - 2.0j, 3, 0.5 + 0.25j)
        converted = ExpPolyDictionaryConverter().to_dict(function)
        self.assertEqual(converted, {"terms": [{"re_coeff": 1.0, "im_coeff": -2.0, "power": 3,
                                                "re_rate": 0.5, "im_rate": 0.25}]})

    def test_from_dict(self):
        """
        Records parse back into the canonical function, missing imaginary parts default to 0.
        """
        converter = ExpPolyDictionaryConverter()
        function = converter.from_dict({"terms": [{"re_coeff": 2.0, "power": 1, "re_rate": 1.0},
                                                  {"re_coeff": 1.0, "power": 1, "re_rate": 1.0}]})
        self.assertTrue((function - ExpPoly.monomial(3.0, 1, 1.0)).is_zero())

    def test_none(self):
        """
        None converts to None both ways.
        """
        converter = ExpPolyDictionaryConverter()
        self.assertIsNone(converter.to_dict(None))
        self.assertIsNone(converter.from_dict(None))
