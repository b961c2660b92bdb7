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
from __future__ import annotations

from typing import List
from typing import Sequence

import numpy as np

from extlab.models.hilbert_element import HilbertElement
from extlab.smalllinalg.gram_schmidt import GramSchmidt


def element_inner(left: HilbertElement, right: HilbertElement) -> complex:
    """
    Inner product callback for GramSchmidt over HilbertElements
    """
    return left.inner_product(right)


class Subspace:
    """
    A finite-dimensional subspace of the model Hilbert space, given by a
    spanning list of HilbertElements.  The orthonormal form is computed on
    first use with pivoted Gram-Schmidt.
    """

    def __init__(self, vectors: Sequence[HilbertElement], orthonormal: bool = False,
                 rank_tol: float = GramSchmidt.DEFAULT_RANK_TOL):
        """
        Constructor

        :param vectors: The spanning vectors
        :param orthonormal: True if the vectors are already an orthonormal basis
        :param rank_tol: The relative rank tolerance for orthonormalization
        """
        self.vectors: List[HilbertElement] = list(vectors)
        self.rank_tol: float = rank_tol
        self.basis: List[HilbertElement] = None
        if orthonormal:
            self.basis = list(self.vectors)

    def get_vectors(self) -> List[HilbertElement]:
        """
        :return: The spanning vectors as given
        """
        return self.vectors

    def orthonormal_basis(self) -> List[HilbertElement]:
        """
        :return: An orthonormal basis of the span
        """
        if self.basis is None:
            self.basis = GramSchmidt.orthonormalize(self.vectors, element_inner, self.rank_tol)
        return self.basis

    def dimension(self) -> int:
        """
        :return: The dimension of the span
        """
        return len(self.orthonormal_basis())

    def coordinates(self, element: HilbertElement) -> np.ndarray:
        """
        :param element: Any element
        :return: The coordinates ⟨b_k, element⟩ of its projection in the orthonormal basis
        """
        return np.array([vector.inner_product(element) for vector in self.orthonormal_basis()], dtype=complex)

    def combine(self, coordinates: Sequence[complex], channel_count: int) -> HilbertElement:
        """
        :param coordinates: Coordinates in the orthonormal basis
        :param channel_count: The channel count of the model
        :return: Σ c_k b_k
        """
        result: HilbertElement = HilbertElement.zeros(channel_count)
        for coordinate, vector in zip(coordinates, self.orthonormal_basis()):
            result = result + vector * complex(coordinate)
        return result

    def project(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: Any element
        :return: The orthogonal projection of the element onto the subspace
        """
        return self.combine(self.coordinates(element), element.channel_count())
