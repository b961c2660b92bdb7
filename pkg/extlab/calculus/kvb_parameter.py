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
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List

import numpy as np

from extlab.models.hilbert_element import HilbertElement
from extlab.models.hilbert_element_dictionary_converter import HilbertElementDictionaryConverter
from extlab.smalllinalg.hermitian_eigen import HermitianEigen


@dataclass(frozen=True)
class KvbParameter:
    """
    The self-adjoint T of the Kreĭn-Višik-Birman parametrisation.

    domain_basis is an orthonormal basis of the closure of 𝒟(T) inside ker S*,
    t_matrix is T in that basis and complement_basis spans ker S* ∩ 𝒟(T)^⊥,
    the directions the w-component of a domain vector lives in.
    An empty domain_basis is the "T = ∞" parameter of S_D itself.
    """

    domain_basis: List[HilbertElement]
    t_matrix: np.ndarray
    complement_basis: List[HilbertElement] = field(default_factory=list)

    def rank(self) -> int:
        """
        :return: dim 𝒟(T)
        """
        return len(self.domain_basis)

    def eigenvalues(self) -> np.ndarray:
        """
        :return: The eigenvalues of T, ascending
        """
        return HermitianEigen.solve(self.t_matrix)[0]

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A data-only dictionary for reports
        """
        converter = HilbertElementDictionaryConverter()
        return {
            "rank": self.rank(),
            "t_matrix": [[[entry.real, entry.imag] for entry in row] for row in self.t_matrix],
            "eigenvalues": [float(value) for value in self.eigenvalues()],
            "complement_dimension": len(self.complement_basis),
            "domain_basis": converter.to_dict_list(self.domain_basis),
            "complement_basis": converter.to_dict_list(self.complement_basis),
        }
