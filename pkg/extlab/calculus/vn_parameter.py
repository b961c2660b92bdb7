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
from typing import Any
from typing import Dict

import numpy as np


@dataclass(frozen=True)
class VnParameter:
    """
    The unitary U of the von Neumann parametrisation at the spectral point z,
    as a d x d matrix from the orthonormal basis of ker(S* - z) to that of
    ker(S* - conj z).  For d = 1, theta is the phase of U in [0, 2π).
    """

    z: complex
    matrix: np.ndarray
    theta: float = None

    def dimension(self) -> int:
        """
        :return: The deficiency index d
        """
        return self.matrix.shape[0]

    def unitarity_residual(self) -> float:
        """
        :return: max |UᴴU - 1|
        """
        product: np.ndarray = self.matrix.conj().T @ self.matrix
        return float(np.max(np.abs(product - np.eye(self.dimension()))))

    def to_dict(self) -> Dict[str, Any]:
        """
        :return: A data-only dictionary for reports
        """
        return {
            "z": [self.z.real, self.z.imag],
            "matrix": [[[entry.real, entry.imag] for entry in row] for row in self.matrix],
            "theta": self.theta,
        }
