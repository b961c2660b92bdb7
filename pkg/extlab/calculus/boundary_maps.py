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
from typing import Dict
from typing import List

import numpy as np

from extlab.calculus.subspace import Subspace
from extlab.interfaces.model import Model
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.models.hilbert_element import HilbertElement


class BoundaryMaps:
    """
    The canonical boundary maps of a Model and their imaginary ε-family.

        Γ₀ = 1 - S_D^{-1} S*                  Γ₁ = P_{ker S*} S*
        Γ₁,ε^- = P_{ker(S*-iε)} (S* + iε)     Γ₁,ε^+ = P_{ker(S*+iε)} (S* - iε)
        Υ_ε = (Γ₁,ε^- - Γ₁,ε^+) / (2iε)       Γ₀,ε = Γ₀ Υ_ε
    """

    MIN_EPS: float = 1e-5
    MAX_EPS: float = 0.5

    MINUS: str = "-"
    PLUS: str = "+"

    def __init__(self, model: Model):
        """
        Constructor

        :param model: The model whose boundary maps these are
        """
        self.model: Model = model
        self.kernels: Dict[complex, Subspace] = {}

    def get_model(self) -> Model:
        """
        :return: The model
        """
        return self.model

    @staticmethod
    def check_eps(eps: float):
        """
        :param eps: A candidate ε
        :raises EpsOutOfRange: when ε is outside [MIN_EPS, MAX_EPS]
        """
        if not BoundaryMaps.MIN_EPS <= eps <= BoundaryMaps.MAX_EPS:
            raise EpsOutOfRange(f"eps={eps} is outside [{BoundaryMaps.MIN_EPS}, {BoundaryMaps.MAX_EPS}]",
                                {"eps": eps})

    @staticmethod
    def sign_point(eps: float, sign: str) -> complex:
        """
        :param eps: ε
        :param sign: MINUS or PLUS
        :return: The spectral point of the kernel the sign projects onto, iε for MINUS and -iε for PLUS
        """
        if sign == BoundaryMaps.MINUS:
            return 1j * eps
        if sign == BoundaryMaps.PLUS:
            return -1j * eps
        raise ValueError(f"sign must be '{BoundaryMaps.MINUS}' or '{BoundaryMaps.PLUS}', got {sign!r}")

    def kernel(self, z: complex) -> Subspace:
        """
        :param z: A spectral point
        :return: ker(S* - z) with the model's orthonormal basis
        """
        key = complex(z)
        if key not in self.kernels:
            self.kernels[key] = Subspace(self.model.deficiency_basis(key), orthonormal=True)
        return self.kernels[key]

    def kernel_basis(self, z: complex) -> List[HilbertElement]:
        """
        :param z: A spectral point
        :return: The orthonormal basis of ker(S* - z)
        """
        return self.kernel(z).orthonormal_basis()

    def project(self, element: HilbertElement, z: complex) -> HilbertElement:
        """
        :param element: Any element
        :param z: A spectral point
        :return: P_{ker(S* - z)} element
        """
        return self.kernel(z).project(element)

    def kernel_coordinates(self, element: HilbertElement, z: complex = 0.0) -> np.ndarray:
        """
        :param element: Any element
        :param z: A spectral point
        :return: The coordinates of P_{ker(S* - z)} element in the orthonormal basis
        """
        return self.kernel(z).coordinates(element)

    def gamma0(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :return: Γ₀g = g - S_D^{-1} S* g, an element of ker S*
        """
        adjoint = self.model.apply_adjoint(element)
        return element - self.model.distinguished_resolvent(adjoint)

    def gamma1(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :return: Γ₁g = P_{ker S*} S* g
        """
        return self.project(self.model.apply_adjoint(element), 0.0)

    def gamma1_eps(self, element: HilbertElement, eps: float, sign: str) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :param eps: ε in [MIN_EPS, MAX_EPS]
        :param sign: MINUS for Γ₁,ε^- = P_{ker(S*-iε)}(S*+iε), PLUS for Γ₁,ε^+ = P_{ker(S*+iε)}(S*-iε)
        :return: The image, which is 2iε u_ε (MINUS) or 2iε v_ε (PLUS)
        """
        self.check_eps(eps)
        point: complex = self.sign_point(eps, sign)
        shifted = self.model.apply_shifted(element, np.conj(point))
        return self.project(shifted, point)

    def upsilon_eps(self, element: HilbertElement, eps: float) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :param eps: ε in [MIN_EPS, MAX_EPS]
        :return: Υ_ε g = u_ε - v_ε
        """
        minus = self.gamma1_eps(element, eps, self.MINUS)
        plus = self.gamma1_eps(element, eps, self.PLUS)
        return (minus - plus) * (1.0 / (2j * eps))

    def gamma0_eps(self, element: HilbertElement, eps: float) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :param eps: ε in [MIN_EPS, MAX_EPS]
        :return: Γ₀,ε g = Γ₀ Υ_ε g
        """
        return self.gamma0(self.upsilon_eps(element, eps))
