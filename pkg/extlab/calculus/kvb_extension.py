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
from extlab.calculus.kvb_parameter import KvbParameter
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.exppoly.exp_poly import ExpPoly
from extlab.interfaces.model import Model
from extlab.models.abstract_extension import AbstractExtension
from extlab.models.hilbert_element import HilbertElement


class KvbExtension(AbstractExtension):
    """
    The extension S_T of a KvbParameter T: g is a member iff Γ₀g ∈ 𝒟(T) and
    P_{𝒟(T)} Γ₁g = T Γ₀g.
    """

    MEMBERSHIP_TOL: float = 1e-9

    def __init__(self, model: Model, kvb: KvbParameter):
        """
        Constructor

        :param model: The host model
        :param kvb: The parameter T
        """
        super().__init__(f"kvb(rank={kvb.rank()})", model)
        self.kvb: KvbParameter = kvb
        self.maps = BoundaryMaps(model)
        self.builder = KvbReconstructor(model, self.maps)

    def get_parameter(self) -> KvbParameter:
        """
        :return: The parameter T
        """
        return self.kvb

    def domain_coordinates(self, element: HilbertElement) -> np.ndarray:
        """
        :return: The coordinates of an element of ker S* in the domain basis of T
        """
        return np.array([vector.inner_product(element) for vector in self.kvb.domain_basis], dtype=complex)

    def is_member(self, element: HilbertElement) -> bool:
        gamma0 = self.maps.gamma0(element)
        gamma1 = self.maps.gamma1(element)
        u_coords = self.domain_coordinates(gamma0)
        t_u = self.kvb.t_matrix @ u_coords if self.kvb.rank() > 0 else u_coords

        scale: float = max(1.0, element.max_coeff(), float(np.max(np.abs(t_u))) if t_u.size > 0 else 0.0)
        tolerance: float = self.MEMBERSHIP_TOL * scale

        # Γ₀g must have no component outside 𝒟(T)
        inside = HilbertElement.zeros(self.model.get_channel_count())
        for coordinate, vector in zip(u_coords, self.kvb.domain_basis):
            inside = inside + vector * coordinate
        outside: float = float(np.max(np.abs(self.maps.kernel_coordinates(gamma0 - inside))))
        if outside > tolerance:
            return False
        mismatch = self.domain_coordinates(gamma1) - t_u
        return bool(mismatch.size == 0 or np.max(np.abs(mismatch)) <= tolerance)

    def basis_probes(self) -> List[HilbertElement]:
        """
        :return: One domain vector per direction of 𝒟(T) and of its complement in ker S*,
                 plus a fixed element of the closure domain
        """
        rank: int = self.kvb.rank()
        complement: int = len(self.kvb.complement_basis)
        channels: int = self.model.get_channel_count()
        zero = HilbertElement.zeros(channels)
        probes: List[HilbertElement] = []
        for index in range(rank):
            u_coords = np.eye(rank, dtype=complex)[index]
            probes.append(self.builder.build_kvb_domain_vector(self.kvb, zero, u_coords, np.zeros(complement)))
        for index in range(complement):
            w_coords = np.eye(complement, dtype=complex)[index]
            probes.append(self.builder.build_kvb_domain_vector(self.kvb, zero, np.zeros(rank), w_coords))
        probes.append(HilbertElement([ExpPoly.monomial(1.0, 2, 1.0)] * channels))
        return probes

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        probes: List[HilbertElement] = self.basis_probes()
        minimum: int = len(probes)
        rank: int = self.kvb.rank()
        complement: int = len(self.kvb.complement_basis)
        while len(probes) < count:
            u_coords = rng.normal(size=rank) + 1j * rng.normal(size=rank)
            w_coords = rng.normal(size=complement) + 1j * rng.normal(size=complement)
            regular = self.model.closure_element(rng)
            probes.append(self.builder.build_kvb_domain_vector(self.kvb, regular, u_coords, w_coords))
        return probes[:max(count, minimum)]
