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
from typing import Sequence
from typing import Tuple

import logging

import numpy as np

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.vn_parameter import VnParameter
from extlab.interfaces.extension import Extension
from extlab.interfaces.model import Model
from extlab.internals.errors.consistency_failure import ConsistencyFailure
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.internals.errors.insufficient_probes import InsufficientProbes
from extlab.internals.errors.not_in_domain import NotInDomain
from extlab.internals.errors.not_unitary import NotUnitary
from extlab.models.hilbert_element import HilbertElement
from extlab.smalllinalg.hermitian_eigen import HermitianEigen


class VnReconstructor:
    """
    Recovers the von Neumann unitary of an extension S̃ from its action.

    For g in 𝒟(S̃) and z in the upper half plane the deficiency components are

        u^{(g)} = P_{ker(S*-z)} (S̃ - z̄) g / (z - z̄)
        U u^{(g)} = P_{ker(S*-z̄)} (S̃ - z) g / (z - z̄)

    and enough probes determine U as a d x d matrix.
    """

    RANK_TOL: float = 1e-10
    UNITARY_TOL: float = 1e-7

    def __init__(self, model: Model, maps: BoundaryMaps = None, rank_tol: float = RANK_TOL):
        """
        Constructor

        :param model: The model
        :param maps: Optional BoundaryMaps to share
        :param rank_tol: Relative singular value threshold for the probe rank test
        """
        self.model: Model = model
        self.maps: BoundaryMaps = maps
        if self.maps is None:
            self.maps = BoundaryMaps(model)
        self.rank_tol: float = rank_tol
        self.logger = logging.getLogger(self.__class__.__name__)

    @staticmethod
    def check_member(extension: Extension, element: HilbertElement):
        """
        :raises NotInDomain: if the element is not in the extension's domain
        """
        if not extension.is_member(element):
            raise NotInDomain(f"Probe is not in the domain of {extension.get_name()}",
                              {"trace": extension.get_model().boundary_trace(element)})

    def component_coordinates(self, extension: Extension, element: HilbertElement,
                              z: complex) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param extension: The extension S̃
        :param element: A member g of its domain
        :param z: A point with Im z > 0
        :return: The coordinates of u^{(g)} in the basis of ker(S* - z) and of U u^{(g)}
                 in the basis of ker(S* - z̄)
        """
        self.check_member(extension, element)
        action = extension.apply(element)
        denominator: complex = z - np.conj(z)
        lower = action - element * np.conj(z)
        upper = action - element * z
        u_coords = self.maps.kernel_coordinates(lower, z) / denominator
        v_coords = self.maps.kernel_coordinates(upper, np.conj(z)) / denominator
        return u_coords, v_coords

    def vn_components(self, extension: Extension, element: HilbertElement,
                      eps: float) -> Tuple[HilbertElement, HilbertElement, HilbertElement]:
        """
        :param extension: The extension S̃
        :param element: A member g of its domain
        :param eps: ε in [1e-5, 0.5]
        :return: A tuple of (u_ε^{(g)}, U_ε u_ε^{(g)}, f_ε^{(g)}) with g = f_ε + u_ε - U_ε u_ε
        """
        self.maps.check_eps(eps)
        point: complex = 1j * eps
        u_coords, v_coords = self.component_coordinates(extension, element, point)
        u_eps = self.maps.kernel(point).combine(u_coords, self.model.get_channel_count())
        unitary_u = self.maps.kernel(np.conj(point)).combine(v_coords, self.model.get_channel_count())
        f_eps = element - u_eps + unitary_u
        if not self.model.closure_membership(f_eps):
            raise ConsistencyFailure("Regular component is not in the closure domain",
                                     {"eps": eps, "trace": self.model.boundary_trace(f_eps)})
        return u_eps, unitary_u, f_eps

    def reconstruct_U(self, extension: Extension, z: complex,
                      probes: Sequence[HilbertElement]) -> VnParameter:
        """
        Solves U A = B in the least-squares sense, where the columns of A and B are
        the coordinates of u^{(g)} and U u^{(g)} over the probes.

        :param extension: The extension S̃
        :param z: A point with Im z > 0
        :param probes: Members of 𝒟(S̃) whose images span ker(S* - z)
        :return: The VnParameter at z
        """
        z = complex(z)
        if z.imag <= 0.0:
            raise EpsOutOfRange(f"reconstruct_U needs Im z > 0, got {z}", {"z": z})

        dimension: int = self.model.get_deficiency_index()
        columns_u: List[np.ndarray] = []
        columns_v: List[np.ndarray] = []
        for probe in probes:
            u_coords, v_coords = self.component_coordinates(extension, probe, z)
            columns_u.append(u_coords)
            columns_v.append(v_coords)

        if len(columns_u) == 0:
            raise InsufficientProbes("No probes given", {"rank": 0, "needed": dimension})
        source = np.array(columns_u, dtype=complex).T
        target = np.array(columns_v, dtype=complex).T

        singular = HermitianEigen.singular_values(source.conj().T)
        threshold: float = self.rank_tol * max(float(singular[0]), np.finfo(float).tiny)
        rank: int = int(np.sum(singular > threshold)) if singular[0] > 0.0 else 0
        if rank < dimension:
            raise InsufficientProbes("Probe images do not span the deficiency space",
                                     {"rank": rank, "needed": dimension})

        matrix = target @ HermitianEigen.pseudo_inverse(source)
        parameter = VnParameter(z=z, matrix=matrix, theta=self.phase(matrix))
        residual: float = parameter.unitarity_residual()
        if residual > self.UNITARY_TOL:
            raise NotUnitary("Reconstructed von Neumann parameter is not unitary",
                             {"residual": residual, "tolerance": self.UNITARY_TOL})

        self.logger.info("Reconstructed U at z=%s from %d probes, unitarity residual %.3g",
                         z, len(probes), residual)
        return parameter

    @staticmethod
    def phase(matrix: np.ndarray) -> float:
        """
        :return: θ in [0, 2π) with U = e^{iθ} for a 1 x 1 unitary, else None
        """
        if matrix.shape != (1, 1):
            return None
        return float(np.mod(np.angle(matrix[0, 0]), 2.0 * np.pi))
