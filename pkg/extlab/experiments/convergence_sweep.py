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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import logging

import numpy as np

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.decomposer import Decomposer
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.calculus.richardson_extrapolator import RichardsonExtrapolator
from extlab.calculus.subspace_geometry import SubspaceGeometry
from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.experiments.slope_fitter import SlopeFitter
from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_report import SweepReport
from extlab.experiments.sweep_report import SweepRow
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.interfaces.extension import Extension
from extlab.interfaces.model import Model
from extlab.internals.checks.assert_forwarder import AssertForwarder
from extlab.internals.checks.verdict_assert_forwarder import VerdictAssertForwarder
from extlab.internals.errors.extrapolation_divergence import ExtrapolationDivergence
from extlab.models.extension_factory import ExtensionFactory
from extlab.models.hilbert_element import HilbertElement
from extlab.models.model_factory import ModelFactory


@dataclass(frozen=True)
class ProbeReference:
    """
    The ε = 0 data of one probe that every ε is compared against.
    """

    element: HilbertElement
    constant: float
    u0: HilbertElement
    u1: HilbertElement
    upsilon_limit: HilbertElement
    regular: HilbertElement


class ConvergenceSweep:
    """
    Measures how the imaginary ε-family of boundary maps and decompositions
    approaches the canonical one, checks each measurement against its
    theoretical bound and fits the convergence order.

    With C = ‖g‖ + ‖S*g‖/m(S), every error is bounded by a multiple of εC
    and QUANTITIES holds the order each one is fitted against.
    """

    # quantity -> expected convergence order (None: not fitted)
    QUANTITIES: Dict[str, Optional[int]] = {
        "projection_gap_minus": 1,
        "projection_gap_plus": 1,
        "gamma1_eps_minus_err": 1,
        "gamma1_eps_plus_err": 1,
        "gamma0_eps_err": 1,
        "upsilon_err": 2,
        "s_upsilon_err": 2,
        "f_eps_err": 2,
        "s_f_eps_err": 2,
        "graph_norm_err": 2,
        "one_minus_u_err": 2,
        "eps_u_norm": None,
    }

    IDENTITY_TOL: float = 1e-9
    BRACKET_RATIO: float = 2.0

    # Richardson limits of the ε-families, relative to max(1, C)
    LIMIT_EPS_GRID: Tuple[float, ...] = KvbReconstructor.DEFAULT_EPS_GRID
    LIMIT_TOL: float = 1e-7

    def __init__(self, config: SweepConfig, asserts: AssertForwarder = None):
        """
        Constructor

        :param config: The validated sweep configuration
        :param asserts: Where the checks go.  Defaults to a VerdictAssertForwarder.
        """
        self.config: SweepConfig = config
        self.asserts: AssertForwarder = asserts
        if self.asserts is None:
            self.asserts = VerdictAssertForwarder()
        self.model: Model = ModelFactory.create_model(config.model)
        self.extension: Extension = ExtensionFactory.create_extension(config.extension, self.model)
        self.fitter = SlopeFitter(config.tolerances.slope_band, config.tolerances.noise_floor)
        self.inverse_bound: float = 1.0 / self.model.get_lower_bound()
        self.logger = logging.getLogger(self.__class__.__name__)

    def make_probes(self) -> List[HilbertElement]:
        """
        :return: Seeded members of the extension's domain
        """
        rng = np.random.default_rng(self.config.seed)
        return self.extension.probes(rng, self.config.probes)

    def reference(self, element: HilbertElement) -> ProbeReference:
        """
        :param element: A probe g
        :return: Its ε = 0 data
        """
        decomposition = Decomposer(self.model).decompose_kvb(element)
        adjoint_norm: float = self.model.apply_adjoint(element).norm()
        return ProbeReference(element=element,
                              constant=element.norm() + self.inverse_bound * adjoint_norm,
                              u0=decomposition.u0,
                              u1=decomposition.u1,
                              upsilon_limit=self.model.distinguished_resolvent(decomposition.u1) + decomposition.u0,
                              regular=decomposition.f)

    def measure_eps(self, eps: float,
                    references: List[ProbeReference]) -> Tuple[List[SweepRow], List[Tuple[str, float, float]]]:
        """
        Computes every quantity at one ε.  Runs on a worker thread, so all
        calculus objects are local.

        :param eps: ε
        :param references: The probe references
        :return: A tuple of (rows, identity checks as (name, measured, tolerance))
        """
        maps = BoundaryMaps(self.model)
        decomposer = Decomposer(self.model, maps)
        geometry = SubspaceGeometry(self.model, maps)
        reconstructor = VnReconstructor(self.model, maps, self.config.tolerances.rank_tol)
        quadrature = QuadratureNorm()
        window: str = self.config.eps.window()

        rows: List[SweepRow] = []
        identities: List[Tuple[str, float, float]] = []

        def add(quantity: str, value: float, bound: float):
            rows.append(SweepRow(eps=eps, quantity_id=quantity, value=float(value), bound=bound,
                                 slope_window=window))

        add("projection_gap_minus", geometry.projection_gap_norm(eps, BoundaryMaps.MINUS), eps * self.inverse_bound)
        add("projection_gap_plus", geometry.projection_gap_norm(eps, BoundaryMaps.PLUS), eps * self.inverse_bound)

        inverse: float = self.inverse_bound
        for index, ref in enumerate(references):
            tag: str = f"@p{index}"
            bound: float = eps * ref.constant
            element = ref.element

            minus = maps.gamma1_eps(element, eps, BoundaryMaps.MINUS)
            plus = maps.gamma1_eps(element, eps, BoundaryMaps.PLUS)
            upsilon = (minus - plus) * (1.0 / (2j * eps))
            s_upsilon = self.model.apply_adjoint(upsilon)

            add("gamma1_eps_minus_err" + tag, (minus - ref.u1).residual_norm(quadrature), bound)
            add("gamma1_eps_plus_err" + tag, (plus - ref.u1).residual_norm(quadrature), bound)
            add("gamma0_eps_err" + tag, (maps.gamma0(upsilon) - ref.u0).residual_norm(quadrature),
                2.0 * inverse * bound)
            add("upsilon_err" + tag, (upsilon - ref.upsilon_limit).residual_norm(quadrature), inverse * bound)
            add("s_upsilon_err" + tag, (s_upsilon - ref.u1).residual_norm(quadrature), bound)

            identity = (s_upsilon - (minus + plus) * 0.5).residual_norm(quadrature)
            identities.append((f"S*Upsilon = (Gamma1- + Gamma1+)/2 at eps={eps:g}{tag}", identity,
                               self.IDENTITY_TOL * max(1.0, ref.constant)))

            decomposition = decomposer.decompose_vn(element, eps)
            regular_difference = decomposition.f_eps - ref.regular
            l2_error: float = regular_difference.residual_norm(quadrature)
            adjoint_error: float = self.model.apply_adjoint(regular_difference).residual_norm(quadrature)
            add("f_eps_err" + tag, l2_error, inverse * bound)
            add("s_f_eps_err" + tag, adjoint_error, bound)

            u_eps, unitary_u, f_eps = reconstructor.vn_components(self.extension, element, eps)
            graph_difference = f_eps - ref.regular
            graph_error: float = graph_difference.residual_norm(quadrature) \
                + self.model.apply_adjoint(graph_difference).residual_norm(quadrature)
            add("graph_norm_err" + tag, graph_error, inverse * bound + bound)
            limit_difference = (u_eps - unitary_u) - (element - ref.regular)
            add("one_minus_u_err" + tag, limit_difference.residual_norm(quadrature), inverse * bound)
            rows.append(SweepRow(eps=eps, quantity_id="eps_u_norm" + tag, value=eps * u_eps.norm(), bound=None,
                                 slope_window=window))

        self.logger.info("Measured eps=%g over %d probes", eps, len(references))
        return rows, identities

    def run(self) -> SweepReport:
        """
        :return: The SweepReport of the configured sweep
        """
        eps_values: List[float] = self.config.eps.values()
        probes = self.make_probes()
        references = [self.reference(probe) for probe in probes]
        self.logger.info("Sweeping %s/%s over %d eps values and %d probes with %d workers",
                         self.model.get_name(), self.extension.get_name(), len(eps_values), len(probes),
                         self.config.workers)

        with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
            futures = {eps: executor.submit(self.measure_eps, eps, references) for eps in eps_values}
            measured = {eps: future.result() for eps, future in futures.items()}

        report = SweepReport(command="sweep", settings=self.config.model_dump(by_alias=True))
        asserts = self.asserts
        for eps in eps_values:
            rows, identities = measured[eps]
            report.rows.extend(rows)
            for row in rows:
                if row.bound is not None:
                    asserts.assertLessEqual(row.value, row.bound, f"{row.quantity_id} at eps={eps:g}")
            for name, value, tolerance in identities:
                asserts.assertLessEqual(value, tolerance, name)

        self.check_brackets(report, asserts)
        self.check_limits(references, report, asserts)
        report.slopes.extend(self.fit_slopes(report, eps_values))
        if isinstance(asserts, VerdictAssertForwarder):
            report.verdicts.extend(asserts.get_verdicts())
        else:
            for fit in report.slopes:
                asserts.assertTrue(fit.passed(), fit.describe())
        return report

    @staticmethod
    def base_quantity(quantity_id: str) -> str:
        """
        :return: The quantity name without its probe tag
        """
        return quantity_id.split("@")[0]

    def series(self, report: SweepReport) -> Dict[str, Tuple[List[float], List[float]]]:
        """
        :return: quantity_id -> (eps values, values) in grid order
        """
        collected: Dict[str, Tuple[List[float], List[float]]] = {}
        for row in report.rows:
            eps_list, value_list = collected.setdefault(row.quantity_id, ([], []))
            eps_list.append(row.eps)
            value_list.append(row.value)
        return collected

    def fit_slopes(self, report: SweepReport, eps_values: List[float]):
        """
        :return: The slope fits of every quantity with an expected order
        """
        fits = []
        window: str = self.config.eps.window()
        for quantity_id, (eps_list, value_list) in self.series(report).items():
            order = self.QUANTITIES.get(self.base_quantity(quantity_id))
            if order is None:
                continue
            fits.append(self.fitter.fit(quantity_id, eps_list, value_list, order, window))
        return fits

    def check_brackets(self, report: SweepReport, asserts: AssertForwarder):
        """
        ε‖u_ε‖ must stay inside a fixed bracket [c₁, c₂] with 0 < c₁ while ‖u_ε‖ itself diverges.
        """
        noise_floor: float = self.config.tolerances.noise_floor
        for quantity_id, (_, value_list) in self.series(report).items():
            if self.base_quantity(quantity_id) != "eps_u_norm" or len(value_list) < 2:
                continue
            if max(value_list) < noise_floor:
                # Probe in the closure domain: no singular part at all
                continue
            ratio: float = max(value_list) / max(min(value_list), noise_floor)
            asserts.assertLessEqual(ratio, self.BRACKET_RATIO, f"{quantity_id} bracket ratio max/min")

    @staticmethod
    def sample(vectors: List[HilbertElement]) -> List[np.ndarray]:
        """
        :param vectors: Vectors with the same channel count
        :return: Each vector as √w·g on one grid per channel that covers every vector given,
                 so Euclidean distances between the arrays are L² distances
        """
        quadrature = QuadratureNorm()
        grids: List[Tuple[np.ndarray, np.ndarray]] = []
        for channel in range(vectors[0].channel_count()):
            rates: List[complex] = [1.0]
            for vector in vectors:
                rates.extend(vector.get_channels()[channel].rates())
            grids.append(quadrature.covering_grid(rates))

        return [np.concatenate([QuadratureNorm.weighted_values(function, nodes, weights)
                                for function, (nodes, weights) in zip(vector.get_channels(), grids)])
                for vector in vectors]

    def limit_families(self, reference: ProbeReference) -> Dict[str, Tuple[List[HilbertElement], HilbertElement]]:
        """
        :param reference: The ε = 0 data of one element
        :return: family name -> (the family on LIMIT_EPS_GRID, the object it converges to)
        """
        maps = BoundaryMaps(self.model)
        decomposer = Decomposer(self.model, maps)
        element = reference.element
        families: Dict[str, Tuple[List[HilbertElement], HilbertElement]] = {
            "gamma1_eps_minus": ([], reference.u1),
            "gamma1_eps_plus": ([], reference.u1),
            "upsilon": ([], reference.upsilon_limit),
            "s_upsilon": ([], reference.u1),
            "gamma0_eps": ([], reference.u0),
            "f_eps": ([], reference.regular),
            "s_f_eps": ([], self.model.apply_adjoint(reference.regular)),
        }
        for eps in self.LIMIT_EPS_GRID:
            minus = maps.gamma1_eps(element, eps, BoundaryMaps.MINUS)
            plus = maps.gamma1_eps(element, eps, BoundaryMaps.PLUS)
            upsilon = (minus - plus) * (1.0 / (2j * eps))
            f_eps = decomposer.decompose_vn(element, eps).f_eps
            values = {
                "gamma1_eps_minus": minus,
                "gamma1_eps_plus": plus,
                "upsilon": upsilon,
                "s_upsilon": self.model.apply_adjoint(upsilon),
                "gamma0_eps": maps.gamma0(upsilon),
                "f_eps": f_eps,
                "s_f_eps": self.model.apply_adjoint(f_eps),
            }
            for name, value in values.items():
                families[name][0].append(value)
        return families

    def check_limits(self, references: List[ProbeReference], report: SweepReport, asserts: AssertForwarder):
        """
        Extrapolates every ε-family to ε = 0 and checks that the limit is the
        canonical object: Γ₁ for both Γ₁,ε^±, S_D^{-1}Γ₁ + Γ₀ for Υ_ε,
        Γ₁ for S*Υ_ε, Γ₀ for Γ₀Υ_ε and f for f_ε in the graph norm.
        Results go to report.extras["extrapolated"].
        """
        extrapolator = RichardsonExtrapolator(self.config.tolerances.extrapolation_tol)
        eps_grid: List[float] = list(self.LIMIT_EPS_GRID)
        results: List[Dict[str, object]] = []
        for index, reference in enumerate(references):
            tolerance: float = self.LIMIT_TOL * max(1.0, reference.constant)
            for name, (family, target) in self.limit_families(reference).items():
                quantity_id: str = f"{name}_limit@p{index}"
                samples = self.sample(family + [target])
                try:
                    limit, estimate = extrapolator.extrapolate(eps_grid, samples[:-1])
                except ExtrapolationDivergence as exception:
                    asserts.assertTrue(False, f"{quantity_id}: {exception} {exception.details}")
                    continue
                error: float = float(np.linalg.norm(limit - samples[-1]))
                results.append({"quantity_id": quantity_id, "error": error, "estimate": estimate,
                                "tolerance": tolerance})
                asserts.assertLessEqual(error, tolerance, f"{quantity_id} against its ε = 0 target")

        self.logger.info("Checked %d extrapolated limits", len(results))
        report.extras["extrapolated"] = results
