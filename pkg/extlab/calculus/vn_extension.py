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

import numpy as np
from numpy.random import Generator

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.vn_parameter import VnParameter
from extlab.exppoly.exp_poly import ExpPoly
from extlab.interfaces.model import Model
from extlab.models.abstract_extension import AbstractExtension
from extlab.models.hilbert_element import HilbertElement


class VnExtension(AbstractExtension):
    """
    The extension S_U of a VnParameter U at z: g = f + u - v is a member iff v = U u,
    where u ∈ ker(S* - z) and v ∈ ker(S* - z̄) are the deficiency components of g.
    """

    MEMBERSHIP_TOL: float = 1e-9

    def __init__(self, model: Model, vn: VnParameter):
        """
        Constructor

        :param model: The host model
        :param vn: The parameter U
        """
        super().__init__(f"vn(z={vn.z})", model)
        self.vn: VnParameter = vn
        self.maps = BoundaryMaps(model)

    def get_parameter(self) -> VnParameter:
        """
        :return: The parameter U
        """
        return self.vn

    def is_member(self, element: HilbertElement) -> bool:
        z: complex = self.vn.z
        denominator: complex = z - np.conj(z)
        adjoint = self.model.apply_adjoint(element)
        u_coords = self.maps.kernel_coordinates(adjoint - element * np.conj(z), z) / denominator
        v_coords = self.maps.kernel_coordinates(adjoint - element * z, np.conj(z)) / denominator

        scale: float = max(1.0, float(np.max(np.abs(u_coords))), element.max_coeff())
        mismatch = v_coords - self.vn.matrix @ u_coords
        return bool(np.max(np.abs(mismatch)) <= self.MEMBERSHIP_TOL * scale)

    def basis_probes(self) -> List[HilbertElement]:
        """
        :return: u - U u for every basis vector u of ker(S* - z), plus a fixed
                 element of the closure domain
        """
        z: complex = self.vn.z
        upper = self.maps.kernel_basis(z)
        lower = self.maps.kernel(np.conj(z))
        probes: List[HilbertElement] = []
        for index, vector in enumerate(upper):
            probes.append(vector - lower.combine(self.vn.matrix[:, index], self.model.get_channel_count()))
        probes.append(HilbertElement([ExpPoly.monomial(1.0, 2, 1.0)] * self.model.get_channel_count()))
        return probes

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        probes: List[HilbertElement] = self.basis_probes()
        minimum: int = len(probes)
        dimension: int = self.vn.dimension()
        while len(probes) < count:
            weights = rng.normal(size=dimension) + 1j * rng.normal(size=dimension)
            combined = self.model.closure_element(rng)
            for weight, probe in zip(weights, probes[:dimension]):
                combined = combined + probe * weight
            probes.append(combined)
        return probes[:max(count, minimum)]
