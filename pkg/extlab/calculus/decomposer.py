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
import logging

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.kvb_decomposition import KvbDecomposition
from extlab.calculus.vn_decomposition import VnDecomposition
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.interfaces.model import Model
from extlab.internals.errors.consistency_failure import ConsistencyFailure
from extlab.internals.errors.not_in_range import NotInRange
from extlab.models.hilbert_element import HilbertElement


class Decomposer:
    """
    The two direct-sum decompositions of the adjoint domain:

        von Neumann at iε:   g = f_ε + u_ε - v_ε
        relative to S_D:     g = f + S_D^{-1} u₁ + u₀
    """

    RESIDUAL_TOL: float = 1e-8

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
        self.quadrature = QuadratureNorm()
        self.logger = logging.getLogger(self.__class__.__name__)

    def get_maps(self) -> BoundaryMaps:
        """
        :return: The BoundaryMaps in use
        """
        return self.maps

    def check_reconstruction(self, element: HilbertElement, rebuilt: HilbertElement, what: str):
        """
        :param element: The decomposed element
        :param rebuilt: Its components summed, with the regular part solved for independently
        :param what: Which decomposition, for the error message
        :raises ConsistencyFailure: when the residual exceeds RESIDUAL_TOL relative to ‖g‖
        """
        residual: float = (element - rebuilt).residual_norm(self.quadrature)
        tolerance: float = self.RESIDUAL_TOL * max(1.0, element.norm())
        if residual > tolerance:
            raise ConsistencyFailure(f"{what} decomposition does not reproduce its input",
                                     {"residual": residual, "tolerance": tolerance})

    @staticmethod
    def chop(part: HilbertElement, scale: float) -> HilbertElement:
        """
        :param part: A deficiency component
        :param scale: The coefficient scale of the decomposed input
        :return: The part, or zero when all of it is rounding noise on that scale
        """
        if part.max_coeff() <= ExpPoly.COEFF_TOL * scale:
            return HilbertElement.zeros(part.channel_count())
        return part

    def check_regular(self, regular: HilbertElement, what: str):
        """
        :param regular: The component that must lie in the domain of the closure
        :param what: Which decomposition, for the error message
        :raises ConsistencyFailure: when it does not
        """
        if not self.model.closure_membership(regular):
            raise ConsistencyFailure(f"Regular part of the {what} decomposition is not in the closure domain",
                                     {"trace": self.model.boundary_trace(regular)})

    def decompose_vn(self, element: HilbertElement, eps: float) -> VnDecomposition:
        """
        :param element: An element g of the adjoint domain
        :param eps: ε in [1e-5, 0.5]
        :return: The VnDecomposition of g at iε
        """
        scale: float = max(1.0, element.max_coeff(), self.model.apply_adjoint(element).max_coeff())
        minus = self.chop(self.maps.gamma1_eps(element, eps, BoundaryMaps.MINUS), scale)
        plus = self.chop(self.maps.gamma1_eps(element, eps, BoundaryMaps.PLUS), scale)
        factor: complex = 1.0 / (2j * eps)
        u_eps = minus * factor
        v_eps = plus * factor
        f_eps = element - u_eps + v_eps

        self.check_regular(f_eps, "von Neumann")
        # (S̄ + iε) f_ε = (S* + iε) g - Γ₁,ε⁻ g
        solved = self.model.shifted_resolvent(self.model.apply_shifted(element, -1j * eps) - minus, -1j * eps)
        self.check_reconstruction(element, solved + u_eps - v_eps, "von Neumann")
        for part, point in ((u_eps, 1j * eps), (v_eps, -1j * eps)):
            image = self.model.apply_shifted(part, point)
            if not image.is_zero():
                raise ConsistencyFailure("Deficiency component is not in its kernel",
                                         {"eps": eps, "point": point, "image_norm": image.norm()})

        self.logger.debug("von Neumann decomposition at eps=%g: |u|=%g |v|=%g",
                          eps, u_eps.norm(), v_eps.norm())
        return VnDecomposition(f_eps=f_eps, u_eps=u_eps, v_eps=v_eps, eps=eps)

    def decompose_kvb(self, element: HilbertElement) -> KvbDecomposition:
        """
        :param element: An element g of the adjoint domain
        :return: The KvbDecomposition g = f + S_D^{-1}u₁ + u₀
        """
        u0 = self.maps.gamma0(element)
        u1 = self.maps.gamma1(element)
        f = element - self.model.distinguished_resolvent(u1) - u0

        kernel_image = self.model.apply_adjoint(u0)
        tolerance: float = ExpPoly.TRACE_TOL * max(1.0, element.max_coeff())
        if not kernel_image.is_zero() and kernel_image.residual_norm(self.quadrature) > tolerance:
            raise ConsistencyFailure("Γ₀g is not in ker S*", {"image_norm": kernel_image.norm()})

        self.check_regular(f, "relative")
        try:
            solved = self.model.closure_solve(self.model.apply_adjoint(element) - u1)
        except NotInRange as exception:
            raise ConsistencyFailure("S*g - Γ₁g is not in the range of the closure",
                                     exception.details) from exception
        self.check_reconstruction(element, solved + self.model.distinguished_resolvent(u1) + u0, "relative")
        return KvbDecomposition(f=f, u1=u1, u0=u0)
