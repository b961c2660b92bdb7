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

from extlab.calculus.boundary_maps import BoundaryMaps
from extlab.calculus.kvb_parameter import KvbParameter
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.calculus.parameter_translator import ParameterTranslator
from extlab.calculus.subspace import Subspace
from extlab.calculus.subspace_geometry import SubspaceGeometry
from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_report import SweepReport
from extlab.experiments.sweep_report import SweepRow
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.internals.checks.assert_forwarder import AssertForwarder
from extlab.internals.checks.verdict_assert_forwarder import VerdictAssertForwarder
from extlab.models.hilbert_element import HilbertElement
from extlab.models.hilbert_element_dictionary_converter import HilbertElementDictionaryConverter
from extlab.models.salpha_extension import SAlphaExtension
from extlab.models.two_half_lines_model import TwoHalfLinesModel


class ExampleTwo:
    """
    The point interactions S_α on the line, seen as extensions of the
    two half-line model.  Channel 0 holds the left half-line reflected onto
    x > 0, so e^{x}⊕e^{-x} on the line is stored as (e^{-x}, e^{-x}).

    Relative to S_D every S_α has 𝒟(T) = span ê with ê = (e^{-x}, e^{-x}),
    T = 2 + α on it, and the complement is spanned by ŵ = (-e^{-x}, e^{-x}).
    For a member g with common boundary value g₀

        u = g₀ ê,    T u + w = (2+α) g₀ ê + (2g₊'(0) - α g₀) ŵ.
    """

    SUBSPACE_TOL: float = 1e-6
    EIGENVALUE_TOL: float = 1e-6
    IDENTITY_TOL: float = 1e-9
    ROUND_TRIP_TOL: float = 1e-6
    ROUND_TRIP_POINT: complex = 0.1j

    def __init__(self, config: SweepConfig = None, asserts: AssertForwarder = None):
        """
        Constructor

        :param config: Supplies alphas, ε grid, seed, probe count and tolerances
        :param asserts: Where the checks go.  Defaults to a VerdictAssertForwarder.
        """
        self.config: SweepConfig = config
        if self.config is None:
            self.config = SweepConfig()
        self.asserts: AssertForwarder = asserts
        if self.asserts is None:
            self.asserts = VerdictAssertForwarder()
        self.model = TwoHalfLinesModel()
        self.maps = BoundaryMaps(self.model)
        self.geometry = SubspaceGeometry(self.model, self.maps)
        self.quadrature = QuadratureNorm()
        self.logger = logging.getLogger(self.__class__.__name__)

    @staticmethod
    def domain_vector() -> HilbertElement:
        """
        :return: ê, normalized
        """
        decay = ExpPoly.monomial(1.0, 0, 1.0)
        return HilbertElement([decay, decay])

    @staticmethod
    def complement_vector() -> HilbertElement:
        """
        :return: ŵ, normalized
        """
        decay = ExpPoly.monomial(1.0, 0, 1.0)
        return HilbertElement([-decay, decay])

    def make_reconstructor(self) -> KvbReconstructor:
        """
        :return: A KvbReconstructor with the configured tolerances
        """
        tolerances = self.config.tolerances
        return KvbReconstructor(self.model, self.maps, t_rank_tol=tolerances.t_rank_tol,
                                extrapolation_tol=tolerances.extrapolation_tol,
                                consistency_tol=tolerances.consistency_tol)

    def run(self) -> SweepReport:
        """
        :return: The report of all Example 2 checks over the configured alphas
        """
        report = SweepReport(command="example2", settings=self.config.model_dump(by_alias=True))
        for alpha in self.config.alphas:
            self.check_alpha(alpha, report)
        if isinstance(self.asserts, VerdictAssertForwarder):
            report.verdicts.extend(self.asserts.get_verdicts())
        return report

    def check_alpha(self, alpha: float, report: SweepReport):
        """
        Runs every check for one coupling.
        """
        asserts = self.asserts
        extension = SAlphaExtension(alpha, self.model)
        rng = np.random.default_rng(self.config.seed)
        probes = extension.probes(rng, self.config.probes)
        reconstructor = self.make_reconstructor()
        label: str = f"alpha={alpha:g}"

        kvb = reconstructor.reconstruct_T(extension, probes)
        report.extras.setdefault("kvb", {})[label] = kvb.to_dict()
        asserts.assertEqual(kvb.rank(), 1, f"dim D(T) at {label}")
        if kvb.rank() != 1:
            return
        self.check_parameter(kvb, alpha, label)

        for index, probe in enumerate(probes):
            self.check_probe(extension, reconstructor, probe, f"{label}@p{index}", report)

        self.check_round_trip(kvb, reconstructor, label)

    def check_parameter(self, kvb: KvbParameter, alpha: float, label: str):
        """
        Compares 𝒟(T), T and the complement with their closed forms.
        """
        asserts = self.asserts
        domain_gap: float = self.geometry.subspace_gap(Subspace(kvb.domain_basis),
                                                       Subspace([self.domain_vector()]))[2]
        asserts.assertLessEqual(domain_gap, self.SUBSPACE_TOL, f"gap of D(T) to span e at {label}")
        asserts.assertAlmostEqual(float(kvb.eigenvalues()[0]), 2.0 + alpha, self.EIGENVALUE_TOL,
                                  f"eigenvalue of T at {label}")
        complement_gap: float = self.geometry.subspace_gap(Subspace(kvb.complement_basis),
                                                           Subspace([self.complement_vector()]))[2]
        asserts.assertLessEqual(complement_gap, self.SUBSPACE_TOL, f"gap of complement to span w at {label}")

    def check_probe(self, extension: SAlphaExtension, reconstructor: KvbReconstructor,
                    probe: HilbertElement, tag: str, report: SweepReport):
        """
        The quadratic form identities, the explicit T u + w, the ε-limit of
        iε(u_ε + U_ε u_ε) and the integration by parts identity on one probe.
        """
        asserts = self.asserts
        alpha: float = extension.get_alpha()
        _, _, value, derivative = self.model.boundary_trace(probe)
        scale: float = max(1.0, probe.norm())
        tolerance: float = self.IDENTITY_TOL * scale * scale

        _, u_part, t_u_plus_w = reconstructor.kvb_components(extension, probe)
        converter = HilbertElementDictionaryConverter()
        report.extras.setdefault("pieces", {})[tag] = {
            "u": converter.to_dict(u_part),
            "tu_plus_w": converter.to_dict(t_u_plus_w),
        }
        asserts.assertAlmostEqual(u_part.inner_product(u_part), abs(value) ** 2, tolerance, f"<u, u> {tag}")
        asserts.assertAlmostEqual(u_part.inner_product(t_u_plus_w), (2.0 + alpha) * abs(value) ** 2,
                                  tolerance, f"<u, Tu> {tag}")

        explicit = self.domain_vector() * ((2.0 + alpha) * value) \
            + self.complement_vector() * (2.0 * derivative - alpha * value)
        asserts.assertLessEqual((t_u_plus_w - explicit).residual_norm(self.quadrature),
                                self.IDENTITY_TOL * scale, f"explicit Tu + w {tag}")

        constant: float = probe.norm() + self.model.apply_adjoint(probe).norm()
        vn_reconstructor = VnReconstructor(self.model, self.maps, self.config.tolerances.rank_tol)
        window: str = self.config.eps.window()
        for eps in self.config.eps.values():
            u_eps, unitary_u, _ = vn_reconstructor.vn_components(extension, probe, eps)
            error: float = ((u_eps + unitary_u) * (1j * eps) - t_u_plus_w).residual_norm(self.quadrature)
            report.rows.append(SweepRow(eps, "ieps_u_plus_uu_err@" + tag, error, eps * constant, window))
            asserts.assertLessEqual(error, eps * constant, f"i eps (u_eps + U u_eps) -> Tu + w at eps={eps:g} {tag}")

        right = probe.get_channels()[1]
        by_parts = ExpPoly.monomial(2.0, 0, 1.0).inner_product(right) \
            - ExpPoly.monomial(1.0, 1, 1.0).inner_product(right.apply_shifted(0.0))
        asserts.assertAlmostEqual(by_parts, value, self.IDENTITY_TOL * scale, f"integration by parts {tag}")

    def check_round_trip(self, kvb: KvbParameter, reconstructor: KvbReconstructor, label: str):
        """
        T → U → T reproduces T.
        """
        asserts = self.asserts
        translator = ParameterTranslator(self.model, kvb_reconstructor=reconstructor)
        unitary = translator.kvb_to_vn(kvb, self.ROUND_TRIP_POINT)
        asserts.assertLessEqual(unitary.unitarity_residual(), VnReconstructor.UNITARY_TOL,
                                f"unitarity of U from T at {label}")

        returned: List[float] = list(translator.vn_to_kvb(unitary).eigenvalues())
        expected: List[float] = list(kvb.eigenvalues())
        asserts.assertEqual(len(returned), len(expected), f"rank after T -> U -> T at {label}")
        for got, want in zip(returned, expected):
            asserts.assertAlmostEqual(got, want, self.ROUND_TRIP_TOL, f"T after T -> U -> T at {label}")
