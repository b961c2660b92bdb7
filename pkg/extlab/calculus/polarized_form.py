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
from typing import List
from typing import Sequence

import numpy as np

# A quadratic form sampled on linear combinations of probe data
QuadraticForm = Callable[[np.ndarray], complex]


class PolarizedForm:
    """
    Recovers all matrix elements of a sesquilinear form from its diagonal:

        s(x, y) = ¼ Σ_{k=0..3} i^{-k} q(x + i^k y)
    """

    def __init__(self, quadratic: QuadraticForm):
        """
        Constructor

        :param quadratic: q(c) = s(x_c, x_c) for the combination x_c = Σ c_p x_p of the probes
        """
        self.quadratic: QuadraticForm = quadratic

    def element(self, size: int, row: int, column: int) -> complex:
        """
        :param size: The number of probes
        :param row: Index of x
        :param column: Index of y
        :return: s(x_row, x_column)
        """
        total: complex = 0j
        for power in range(4):
            phase: complex = 1j ** power
            combination = np.zeros(size, dtype=complex)
            combination[row] += 1.0
            combination[column] += phase
            total += np.conj(phase) * self.quadratic(combination)
        return 0.25 * total

    def matrix(self, size: int) -> np.ndarray:
        """
        :param size: The number of probes
        :return: The size x size matrix of s on the probes
        """
        entries: List[List[complex]] = [[self.element(size, row, column) for column in range(size)]
                                        for row in range(size)]
        return np.array(entries, dtype=complex).reshape(size, size)

    @staticmethod
    def from_data(left: Sequence[np.ndarray], right: Sequence[np.ndarray]) -> "PolarizedForm":
        """
        :param left: Vectors a_p
        :param right: Vectors b_p, linear in the same probe combination as a_p
        :return: The PolarizedForm of q(c) = ⟨Σ c_p a_p, Σ c_p b_p⟩
        """
        left_matrix = np.array(left, dtype=complex)
        right_matrix = np.array(right, dtype=complex)

        def quadratic(combination: np.ndarray) -> complex:
            return complex(np.vdot(combination @ left_matrix, combination @ right_matrix))

        return PolarizedForm(quadratic)
