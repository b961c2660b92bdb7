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
from typing import List
from typing import Tuple

import logging

import numpy as np

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.subspace import Subspace
from extlab.calculus.subspace import element_inner
from extlab.interfaces.model import Model
from extlab.models.hilbert_element import HilbertElement
from extlab.smalllinalg.gram_schmidt import GramSchmidt
from extlab.smalllinalg.hermitian_eigen import HermitianEigen


class SubspaceGeometry:
    """
    Opening (gap) between finite-dimensional subspaces and norms of
    differences of orthogonal projections.

    Both are computed on the joint span of the two subspaces: the operators
    involved have range inside that span and vanish on its complement, so
    the restriction carries the full operator norm.
    """

    def __init__(self, model: Model, maps: BoundaryMaps = None):
        """
        Constructor

        :param model: The model
        :param maps: Optional BoundaryMaps to share
        """
        self.model: Model = model
        self.maps: BoundaryMaps = maps
        if self.maps is None:
            self.maps = BoundaryMaps(model)
        self.logger = logging.getLogger(self.__class__.__name__)

    @staticmethod
    def joint_basis(first: Subspace, second: Subspace) -> List[HilbertElement]:
        """
        :return: An orthonormal basis of the sum of the two subspaces
        """
        vectors = first.orthonormal_basis() + second.orthonormal_basis()
        return GramSchmidt.orthonormalize(vectors, element_inner)

    @staticmethod
    def one_sided_gap(source: Subspace, target: Subspace, joint: List[HilbertElement]) -> float:
        """
        :return: δ(source, target) = ‖(1 - P_target) restricted to source‖
        """
        basis = source.orthonormal_basis()
        if len(basis) == 0:
            return 0.0
        if target.dimension() == 0:
            return 1.0

        # Columns are the joint-basis coordinates of (1 - P_target) q for q in the source basis
        coordinates = np.zeros((len(joint), len(basis)), dtype=complex)
        for column, vector in enumerate(basis):
            residual = vector - target.project(vector)
            for row, joint_vector in enumerate(joint):
                coordinates[row, column] = joint_vector.inner_product(residual)
        return float(HermitianEigen.singular_values(coordinates)[0])

    def subspace_gap(self, first: Subspace, second: Subspace) -> Tuple[float, float, float]:
        """
        :param first: Subspace A
        :param second: Subspace B
        :return: A tuple of (δ(A, B), δ(B, A), δ̂ = max of the two)
        """
        joint = self.joint_basis(first, second)
        forward: float = self.one_sided_gap(first, second, joint)
        backward: float = self.one_sided_gap(second, first, joint)
        return forward, backward, max(forward, backward)

    def projection_difference_norm(self, first: Subspace, second: Subspace) -> float:
        """
        :return: ‖P_A - P_B‖ as the largest |eigenvalue| of the Hermitian difference on the joint span
        """
        joint = self.joint_basis(first, second)
        if len(joint) == 0:
            return 0.0

        first_coords = np.array([first.coordinates(vector) for vector in joint], dtype=complex).reshape(
            len(joint), first.dimension())
        second_coords = np.array([second.coordinates(vector) for vector in joint], dtype=complex).reshape(
            len(joint), second.dimension())

        # Entry (i, j) of P_A on the joint basis is Σ_k conj⟨a_k, j_i⟩ ⟨a_k, j_j⟩
        difference = first_coords.conj() @ first_coords.T - second_coords.conj() @ second_coords.T
        eigenvalues, _ = HermitianEigen.solve(difference)
        return float(np.max(np.abs(eigenvalues)))

    def projection_gap_norm(self, eps: float, sign: str) -> float:
        """
        :param eps: ε in [1e-5, 0.5]
        :param sign: BoundaryMaps.MINUS for ker(S* - iε), BoundaryMaps.PLUS for ker(S* + iε)
        :return: ‖P_{ker(S*∓iε)} - P_{ker S*}‖
        """
        self.maps.check_eps(eps)
        point: complex = self.maps.sign_point(eps, sign)
        value: float = self.projection_difference_norm(self.maps.kernel(point), self.maps.kernel(0.0))
        self.logger.debug("Projection gap at eps=%g sign=%s: %g", eps, sign, value)
        return value
