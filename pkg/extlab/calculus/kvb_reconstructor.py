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
from extlab.calculus.kvb_parameter import KvbParameter
from extlab.calculus.polarized_form import PolarizedForm
from extlab.calculus.richardson_extrapolator import RichardsonExtrapolator
from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.interfaces.extension import Extension
from extlab.interfaces.model import Model
from extlab.internals.errors.consistency_failure import ConsistencyFailure
from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.internals.errors.insufficient_probes import InsufficientProbes
from extlab.internals.errors.not_in_domain import NotInDomain
from extlab.models.hilbert_element import HilbertElement
from extlab.smalllinalg.gram_schmidt import GramSchmidt
from extlab.smalllinalg.hermitian_eigen import HermitianEigen


def coordinate_inner(left: np.ndarray, right: np.ndarray) -> complex:
    """
    Standard inner product on coordinate vectors
    """
    return complex(np.vdot(left, right))


class KvbReconstructor:
    """
    Recovers the Kreĭn-Višik-Birman parameter T of an extension S̃, either
    directly from the decomposition relative to S_D,

        u^{(g)} = (1 - S_D^{-1} S̃) g,   T u^{(g)} + w^{(g)} = P_{ker S*} S̃ g

    or as the ε → 0 limit of its von Neumann data,

        u^{(g)} = lim Γ₀ (u_ε - U_ε u_ε),   T u^{(g)} + w^{(g)} = lim iε (u_ε + U_ε u_ε).

    All vectors of ker S* are handled as coordinates in its orthonormal basis.
    """

    T_RANK_TOL: float = 1e-7
    CONSISTENCY_TOL: float = 1e-6
    RESIDUAL_TOL: float = 1e-9
    DEFAULT_EPS_GRID: Tuple[float, ...] = (2e-4, 1e-4, 5e-5)

    def __init__(self, model: Model, maps: BoundaryMaps = None,
                 t_rank_tol: float = T_RANK_TOL,
                 extrapolation_tol: float = RichardsonExtrapolator.DEFAULT_TOL,
                 consistency_tol: float = CONSISTENCY_TOL):
        """
        Constructor

        :param model: The model
        :param maps: Optional BoundaryMaps to share
        :param t_rank_tol: Limit vectors shorter than this times the largest probe norm are zero
        :param extrapolation_tol: Largest accepted Richardson error estimate
        :param consistency_tol: Largest accepted difference between the limit and direct routes
        """
        self.model: Model = model
        self.maps: BoundaryMaps = maps
        if self.maps is None:
            self.maps = BoundaryMaps(model)
        self.t_rank_tol: float = t_rank_tol
        self.consistency_tol: float = consistency_tol
        self.extrapolator = RichardsonExtrapolator(extrapolation_tol)
        self.vn_reconstructor = VnReconstructor(model, self.maps)
        self.quadrature = QuadratureNorm()
        self.logger = logging.getLogger(self.__class__.__name__)

    def kvb_components(self, extension: Extension,
                       element: HilbertElement) -> Tuple[HilbertElement, HilbertElement, HilbertElement]:
        """
        :param extension: The extension S̃
        :param element: A member g of its domain
        :return: A tuple of (f^{(g)}, u^{(g)}, T u^{(g)} + w^{(g)}) with g = f + S_D^{-1}(Tu + w) + u
        """
        VnReconstructor.check_member(extension, element)
        action = extension.apply(element)
        t_u_plus_w = self.maps.project(action, 0.0)
        u_part = element - self.model.distinguished_resolvent(action)
        f_part = self.model.distinguished_resolvent(action - t_u_plus_w)

        rebuilt = f_part + self.model.distinguished_resolvent(t_u_plus_w) + u_part
        residual: float = (element - rebuilt).residual_norm(self.quadrature)
        tolerance: float = self.RESIDUAL_TOL * max(1.0, element.norm())
        if residual > tolerance:
            raise ConsistencyFailure("Relative decomposition does not reproduce the probe",
                                     {"residual": residual, "tolerance": tolerance})
        if not self.model.closure_membership(f_part):
            raise ConsistencyFailure("f^{(g)} is not in the closure domain",
                                     {"trace": self.model.boundary_trace(f_part)})
        return f_part, u_part, t_u_plus_w

    def limit_data(self, extension: Extension, element: HilbertElement,
                   eps_grid: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
        """
        :return: The extrapolated ker S* coordinates of (u^{(g)}, T u^{(g)} + w^{(g)})
        """
        a_values: List[np.ndarray] = []
        b_values: List[np.ndarray] = []
        for eps in eps_grid:
            u_eps, unitary_u, _ = self.vn_reconstructor.vn_components(extension, element, eps)
            a_values.append(self.maps.kernel_coordinates(self.maps.gamma0(u_eps - unitary_u)))
            b_values.append(self.maps.kernel_coordinates((u_eps + unitary_u) * (1j * eps)))

        a_limit, a_error = self.extrapolator.extrapolate(eps_grid, a_values)
        b_limit, b_error = self.extrapolator.extrapolate(eps_grid, b_values)
        self.logger.debug("Richardson error estimates: a %.3g, b %.3g", a_error, b_error)
        return a_limit, b_limit

    def direct_data(self, extension: Extension, element: HilbertElement) -> Tuple[np.ndarray, np.ndarray]:
        """
        :return: The ker S* coordinates of (u^{(g)}, T u^{(g)} + w^{(g)}) without limits
        """
        _, u_part, t_u_plus_w = self.kvb_components(extension, element)
        return self.maps.kernel_coordinates(u_part), self.maps.kernel_coordinates(t_u_plus_w)

    def assemble(self, a_data: Sequence[np.ndarray], b_data: Sequence[np.ndarray],
                 probe_scale: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param a_data: Coordinates of u^{(g)} over the probes
        :param b_data: Coordinates of T u^{(g)} + w^{(g)} over the probes
        :param probe_scale: The largest probe norm
        :return: A tuple of (Q, T_Q): Q has orthonormal columns spanning 𝒟(T) in
                 ker S* coordinates and T_Q is the Hermitian matrix of T in that basis
        """
        dimension: int = self.model.get_deficiency_index()
        threshold: float = self.t_rank_tol * max(probe_scale, 1.0)
        kept = [vector for vector in a_data if np.linalg.norm(vector) >= threshold]
        dropped: int = len(a_data) - len(kept)
        if dropped > 0:
            self.logger.info("%d of %d limit vectors are below %.3g and count as T = ∞ directions",
                             dropped, len(a_data), threshold)

        domain: List[np.ndarray] = []
        if len(kept) > 0:
            domain = GramSchmidt.orthonormalize(kept, coordinate_inner, self.t_rank_tol)
        basis = np.array(domain, dtype=complex).reshape(len(domain), dimension).T
        if basis.shape[1] == 0:
            return basis, np.zeros((0, 0), dtype=complex)

        # Matrix elements ⟨u_p, T u_q⟩ = ⟨u_p, Tu_q + w_q⟩ by polarization of the diagonal form
        form_matrix = PolarizedForm.from_data(a_data, b_data).matrix(len(a_data))

        in_basis = basis.conj().T @ np.array(a_data, dtype=complex).reshape(len(a_data), dimension).T
        left_inverse = HermitianEigen.pseudo_inverse(in_basis.conj().T)
        right_inverse = HermitianEigen.pseudo_inverse(in_basis)
        raw = left_inverse @ form_matrix @ right_inverse

        asymmetry: float = float(np.max(np.abs(raw - raw.conj().T)))
        self.logger.debug("Hermitization asymmetry of T: %.3g", asymmetry)
        return basis, 0.5 * (raw + raw.conj().T)

    def reconstruct_T(self, extension: Extension, probes: Sequence[HilbertElement],
                      eps_grid: Sequence[float] = DEFAULT_EPS_GRID) -> KvbParameter:
        """
        :param extension: The extension S̃
        :param probes: Members of 𝒟(S̃)
        :param eps_grid: At least three strictly decreasing ε values in [1e-5, 0.5]
        :return: The KvbParameter of S̃, cross-checked against the direct route
        """
        if len(eps_grid) < 3:
            raise ValueError(f"reconstruct_T needs at least three eps values, got {len(eps_grid)}")
        for eps in eps_grid:
            self.maps.check_eps(eps)
        if any(later >= earlier for earlier, later in zip(eps_grid, eps_grid[1:])):
            raise ValueError(f"eps_grid must be strictly decreasing, got {list(eps_grid)}")
        if len(probes) == 0:
            raise InsufficientProbes("No probes given", {"rank": 0})

        probe_scale: float = max(probe.norm() for probe in probes)
        limits = [self.limit_data(extension, probe, eps_grid) for probe in probes]
        basis, t_matrix = self.assemble([pair[0] for pair in limits], [pair[1] for pair in limits], probe_scale)

        directs = [self.direct_data(extension, probe) for probe in probes]
        direct_basis, direct_t = self.assemble([pair[0] for pair in directs], [pair[1] for pair in directs],
                                               probe_scale)
        self.cross_check(basis, t_matrix, direct_basis, direct_t)

        parameter = self.to_parameter(basis, t_matrix)
        self.logger.info("Reconstructed T of %s: rank %d, eigenvalues %s",
                         extension.get_name(), parameter.rank(), parameter.eigenvalues())
        return parameter

    def cross_check(self, basis: np.ndarray, t_matrix: np.ndarray,
                    direct_basis: np.ndarray, direct_t: np.ndarray):
        """
        Compares the two routes through the basis-independent d x d matrix Q T_Q Qᴴ
        and the projection onto 𝒟(T).

        :raises ConsistencyFailure: when they disagree by more than consistency_tol
        """
        if basis.shape[1] != direct_basis.shape[1]:
            raise ConsistencyFailure("Limit and direct routes disagree on dim D(T)",
                                     {"limit_rank": basis.shape[1], "direct_rank": direct_basis.shape[1]})
        full = basis @ t_matrix @ basis.conj().T
        direct_full = direct_basis @ direct_t @ direct_basis.conj().T
        difference: float = float(np.max(np.abs(full - direct_full))) if full.size > 0 else 0.0
        projection_difference: float = float(np.max(np.abs(basis @ basis.conj().T
                                                           - direct_basis @ direct_basis.conj().T))) \
            if full.size > 0 else 0.0
        scale: float = max(1.0, float(np.max(np.abs(direct_full))) if full.size > 0 else 0.0)
        if difference > self.consistency_tol * scale or projection_difference > self.consistency_tol:
            raise ConsistencyFailure("Limit and direct routes to T disagree",
                                     {"t_difference": difference, "domain_difference": projection_difference,
                                      "tolerance": self.consistency_tol * scale})

    def to_parameter(self, basis: np.ndarray, t_matrix: np.ndarray) -> KvbParameter:
        """
        :param basis: Orthonormal columns spanning 𝒟(T) in ker S* coordinates
        :param t_matrix: T in that basis
        :return: The KvbParameter with HilbertElement bases
        """
        dimension: int = self.model.get_deficiency_index()
        projector = np.eye(dimension, dtype=complex) - basis @ basis.conj().T
        residuals = [projector[:, column] for column in range(dimension)]
        complement = GramSchmidt.orthonormalize(residuals, coordinate_inner, GramSchmidt.DEFAULT_RANK_TOL)
        if len(complement) + basis.shape[1] != dimension:
            raise ConsistencyFailure("D(T) and its complement do not span ker S*",
                                     {"rank": basis.shape[1], "complement": len(complement)})

        kernel = self.maps.kernel(0.0)
        channels: int = self.model.get_channel_count()
        domain_basis = [kernel.combine(basis[:, column], channels) for column in range(basis.shape[1])]
        complement_basis = [kernel.combine(vector, channels) for vector in complement]
        return KvbParameter(domain_basis=domain_basis, t_matrix=t_matrix, complement_basis=complement_basis)

    def build_kvb_domain_vector(self, kvb: KvbParameter, regular: HilbertElement,
                                u_coords: Sequence[complex], w_coords: Sequence[complex]) -> HilbertElement:
        """
        :param kvb: The parameter T
        :param regular: An element f of the closure domain
        :param u_coords: Coordinates of u in kvb.domain_basis
        :param w_coords: Coordinates of w in kvb.complement_basis
        :return: g = f + S_D^{-1}(T u + w) + u
        """
        if len(u_coords) != kvb.rank() or len(w_coords) != len(kvb.complement_basis):
            raise DimensionMismatch("Coordinate lists do not match the parameter's bases",
                                    {"u": (len(u_coords), kvb.rank()),
                                     "w": (len(w_coords), len(kvb.complement_basis))})
        if not self.model.closure_membership(regular):
            raise NotInDomain("f is not in the closure domain", {"trace": self.model.boundary_trace(regular)})

        channels: int = self.model.get_channel_count()
        u_vector = np.asarray(u_coords, dtype=complex)
        t_u_coords = kvb.t_matrix @ u_vector if kvb.rank() > 0 else u_vector

        u_part = HilbertElement.zeros(channels)
        t_u_plus_w = HilbertElement.zeros(channels)
        for coordinate, t_coordinate, vector in zip(u_vector, t_u_coords, kvb.domain_basis):
            u_part = u_part + vector * coordinate
            t_u_plus_w = t_u_plus_w + vector * t_coordinate
        for coordinate, vector in zip(w_coords, kvb.complement_basis):
            t_u_plus_w = t_u_plus_w + vector * complex(coordinate)

        return regular + self.model.distinguished_resolvent(t_u_plus_w) + u_part
