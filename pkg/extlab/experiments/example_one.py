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

import logging

import numpy as np

from extlab.calculus.decomposer import Decomposer
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.calculus.parameter_translator import ParameterTranslator
from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.experiments.slope_fitter import SlopeFitter
from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_report import SweepReport
from extlab.experiments.sweep_report import SweepRow
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.internals.checks.assert_forwarder import AssertForwarder
from extlab.internals.checks.verdict_assert_forwarder import VerdictAssertForwarder
from extlab.models.channelwise_model import ChannelwiseModel
from extlab.models.friedrichs_extension import FriedrichsExtension
from extlab.models.halfline_model import HalfLineModel
from extlab.models.hilbert_element import HilbertElement
from extlab.models.hilbert_element_dictionary_converter import HilbertElementDictionaryConverter


class ExampleOne:
    """
    The Friedrichs extension of S = -d²/dx² + 1 on the half-line.

    Its von Neumann unitary is 1 at every iε, and for a member g with
    c = 2g'(0) the regular part has the closed form

        f_ε = g - (c/2) Re k (e^{-kx} - e^{-k̄x}) / (iε),    k = √(1 - iε)

    which tends to f = g - (c/2) x e^{-x} while ε‖u_ε‖ stays bounded away from 0 and ∞.
    """

    UNITARY_TOL: float = 1e-10
    CLOSED_FORM_TOL: float = 1e-9
    BRACKET_RATIO: float = 1.5
    ROUND_TRIP_POINT: complex = 0.1j
    ROUND_TRIP_TOL: float = 1e-8

    def __init__(self, config: SweepConfig = None, asserts: AssertForwarder = None):
        """
        Constructor

        :param config: Supplies the ε grid, seed, probe count and tolerances
        :param asserts: Where the checks go.  Defaults to a VerdictAssertForwarder.
        """
        self.config: SweepConfig = config
        if self.config is None:
            self.config = SweepConfig()
        self.asserts: AssertForwarder = asserts
        if self.asserts is None:
            self.asserts = VerdictAssertForwarder()
        self.model = HalfLineModel()
        self.extension = FriedrichsExtension(self.model)
        self.quadrature = QuadratureNorm()
        self.fitter = SlopeFitter(self.config.tolerances.slope_band, self.config.tolerances.noise_floor)
        self.logger = logging.getLogger(self.__class__.__name__)

    @staticmethod
    def derivative_at_zero(element: HilbertElement) -> complex:
        """
        :return: g'(0) of a half-line element
        """
        return element.get_channels()[0].boundary_values()[1]

    def closed_form_coefficient(self, element: HilbertElement, eps: float) -> complex:
        """
        :return: The coordinate of u_ε in the normalized basis √(2 Re k) e^{-kx},
                 √(Re k) g'(0) / (√2 iε)
        """
        rate: complex = ChannelwiseModel.deficiency_rate(1j * eps)
        return np.sqrt(rate.real) * self.derivative_at_zero(element) / (np.sqrt(2.0) * 1j * eps)

    def closed_form_singular(self, element: HilbertElement, eps: float) -> HilbertElement:
        """
        :return: u_ε - U_ε u_ε = g'(0) Re k (e^{-kx} - e^{-k̄x}) / (iε)
        """
        rate: complex = ChannelwiseModel.deficiency_rate(1j * eps)
        scale: complex = self.derivative_at_zero(element) * rate.real / (1j * eps)
        difference = ExpPoly.monomial(scale, 0, rate) - ExpPoly.monomial(scale, 0, np.conj(rate))
        return HilbertElement([difference])

    def closed_form_limit(self, element: HilbertElement) -> HilbertElement:
        """
        :return: f = g - (c/2) x e^{-x} = g - g'(0) x e^{-x}
        """
        return element - HilbertElement([ExpPoly.monomial(self.derivative_at_zero(element), 1, 1.0)])

    def run(self) -> SweepReport:
        """
        :return: The report of all Example 1 checks
        """
        asserts = self.asserts
        eps_values: List[float] = self.config.eps.values()
        window: str = self.config.eps.window()
        rng = np.random.default_rng(self.config.seed)
        probes = self.extension.probes(rng, self.config.probes)
        reconstructor = VnReconstructor(self.model, rank_tol=self.config.tolerances.rank_tol)
        decomposer = Decomposer(self.model)
        report = SweepReport(command="example1", settings=self.config.model_dump(by_alias=True))
        converter = HilbertElementDictionaryConverter()

        for eps in eps_values:
            unitary = reconstructor.reconstruct_U(self.extension, 1j * eps, probes)
            report.extras.setdefault("theta", []).append(unitary.theta)
            asserts.assertLessEqual(float(abs(unitary.matrix[0, 0] - 1.0)), self.UNITARY_TOL,
                                    f"|U_eps - 1| at eps={eps:g}")

        for index, probe in enumerate(probes):
            tag: str = f"@p{index}"
            limit = self.closed_form_limit(probe)
            regular = decomposer.decompose_kvb(probe).f
            report.extras.setdefault("limits", {})["p" + str(index)] = {
                "g": converter.to_dict(probe),
                "f": converter.to_dict(regular),
                "g_minus_f": converter.to_dict(probe - regular),
            }
            asserts.assertLessEqual((regular - limit).residual_norm(self.quadrature),
                                    self.CLOSED_FORM_TOL * max(1.0, probe.norm()),
                                    f"f = g - (c/2) x e^(-x){tag}")
            constant: float = probe.norm() + self.model.apply_adjoint(probe).norm()

            eps_norms: List[float] = []
            for eps in eps_values:
                u_coords, v_coords = reconstructor.component_coordinates(self.extension, probe, 1j * eps)
                expected: complex = self.closed_form_coefficient(probe, eps)
                scale: float = max(abs(expected), np.finfo(float).tiny)
                asserts.assertLessEqual(float(abs(u_coords[0] - expected)) / scale, self.CLOSED_FORM_TOL,
                                        f"c_eps closed form at eps={eps:g}{tag}")

                u_eps, unitary_u, f_eps = reconstructor.vn_components(self.extension, probe, eps)
                singular_error: float = ((u_eps - unitary_u) - self.closed_form_singular(probe, eps)) \
                    .residual_norm(self.quadrature)
                asserts.assertLessEqual(singular_error, self.CLOSED_FORM_TOL * max(1.0, probe.norm()),
                                        f"u_eps - U u_eps closed form at eps={eps:g}{tag}")

                difference = f_eps - limit
                l2_error: float = difference.residual_norm(self.quadrature)
                graph_error: float = l2_error + self.model.apply_adjoint(difference).residual_norm(self.quadrature)
                report.rows.append(SweepRow(eps, "f_eps_err" + tag, l2_error, eps * constant, window))
                report.rows.append(SweepRow(eps, "graph_norm_err" + tag, graph_error, 2.0 * eps * constant, window))
                asserts.assertLessEqual(l2_error, eps * constant, f"||f_eps - f|| at eps={eps:g}{tag}")
                asserts.assertLessEqual(graph_error, 2.0 * eps * constant,
                                        f"graph norm of f_eps - f at eps={eps:g}{tag}")

                eps_norm: float = eps * u_eps.norm()
                eps_norms.append(eps_norm)
                report.rows.append(SweepRow(eps, "eps_u_norm" + tag, eps_norm, None, window))

            if abs(self.derivative_at_zero(probe)) > ChannelwiseModel.trace_tolerance(probe):
                ratio: float = max(eps_norms) / min(eps_norms)
                asserts.assertLessEqual(ratio, self.BRACKET_RATIO, f"eps ||u_eps|| bracket{tag}")

            for quantity in ("f_eps_err", "graph_norm_err"):
                values = [row.value for row in report.rows if row.quantity_id == quantity + tag]
                fit = self.fitter.fit(quantity + tag, eps_values, values, 2, window)
                report.slopes.append(fit)

        self.check_parameters(probes, report)
        if isinstance(asserts, VerdictAssertForwarder):
            report.verdicts.extend(asserts.get_verdicts())
        else:
            for fit in report.slopes:
                asserts.assertTrue(fit.passed(), fit.describe())
        return report

    def check_parameters(self, probes: List[HilbertElement], report: SweepReport):
        """
        T of the Friedrichs extension is the trivial relation: 𝒟(T) = {0} and the
        complement is all of ker S*.  Translating it back gives U = 1.
        """
        asserts = self.asserts
        tolerances = self.config.tolerances
        reconstructor = KvbReconstructor(self.model, t_rank_tol=tolerances.t_rank_tol,
                                         extrapolation_tol=tolerances.extrapolation_tol,
                                         consistency_tol=tolerances.consistency_tol)
        kvb = reconstructor.reconstruct_T(self.extension, probes)
        asserts.assertEqual(kvb.rank(), 0, "dim D(T) of the Friedrichs extension")
        asserts.assertEqual(len(kvb.complement_basis), self.model.get_deficiency_index(),
                            "complement of D(T) is ker S*")

        translator = ParameterTranslator(self.model, kvb_reconstructor=reconstructor)
        unitary = translator.kvb_to_vn(kvb, self.ROUND_TRIP_POINT)
        asserts.assertLessEqual(float(abs(unitary.matrix[0, 0] - 1.0)), self.ROUND_TRIP_TOL,
                                "U from T round trip")
        report.extras["kvb"] = kvb.to_dict()
        report.extras["round_trip_vn"] = unitary.to_dict()
