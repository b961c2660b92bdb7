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

from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm


class ExpPolyDictionaryConverter(DictionaryConverter):
    """
    DictionaryConverter implementation for ExpPoly.

    The data-only form is {"terms": [records]} where each record is
    {re_coeff, im_coeff, power, re_rate, im_rate}.  The same records are
    used in the golden fixtures and, through HilbertElementDictionaryConverter,
    for the vectors in the JSON reports.
    """

    def to_dict(self, obj: ExpPoly) -> Dict[str, Any]:
        """
        :param obj: The ExpPoly to be converted into a dictionary
        :return: A data-only dictionary that represents all the data for
                the given object.  If obj is None, None is returned.
        """
        if obj is None:
            return None
        return {"terms": self.to_records(obj)}

    def from_dict(self, obj_dict: Dict[str, Any]) -> ExpPoly:
        """
        :param obj_dict: The data-only dictionary to be converted into an object
        :return: An ExpPoly instance created from the given dictionary.
                If obj_dict is None, the returned object is also None.
        """
        if obj_dict is None:
            return None
        return self.from_records(obj_dict.get("terms", []))

    @staticmethod
    def to_records(obj: ExpPoly) -> List[Dict[str, Any]]:
        """
        :param obj: The ExpPoly to serialize
        :return: The list of term records, in canonical order
        """
        records: List[Dict[str, Any]] = []
        for term in obj.get_terms():
            coeff = complex(term.coeff)
            rate = complex(term.rate)
            records.append({
                "re_coeff": coeff.real,
                "im_coeff": coeff.imag,
                "power": int(term.power),
                "re_rate": rate.real,
                "im_rate": rate.imag,
            })
        return records

    @staticmethod
    def from_records(records: List[Dict[str, Any]]) -> ExpPoly:
        """
        :param records: A list of term records
        :return: The canonical ExpPoly they describe
        """
        terms: List[ExpPolyTerm] = []
        for record in records:
            coeff = complex(record.get("re_coeff", 0.0), record.get("im_coeff", 0.0))
            rate = complex(record.get("re_rate"), record.get("im_rate", 0.0))
            terms.append(ExpPolyTerm(coeff, int(record.get("power", 0)), rate))
        return ExpPoly(terms)
