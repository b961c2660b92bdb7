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
from unittest import TestCase

import numpy as np

import pytest

from parameterized import parameterized

from extlab.calculus.kvb_extension import KvbExtension
from extlab.calculus.kvb_parameter import KvbParameter
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.exppoly.exp_poly import ExpPoly
from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.internals.errors.insufficient_probes import InsufficientProbes
from extlab.internals.errors.not_in_domain import NotInDomain
from extlab.models.friedrichs_extension import FriedrichsExtension
from extlab.models.halfline_model import HalfLineModel
from extlab.models.hilbert_element import HilbertElement
from extlab.models.salpha_extension import SAlphaExtension


class TestKvbReconstructor(TestCase):
    """
    Unit tests for reconstructing the Kreĭn-Višik-Birman parameter from domain probes.
    """

    def setUp(self):
        self.model = HalfLineModel()
        self.reconstructor = KvbReconstructor(self.model)
        # T = τ on the span of √2 e^{-x} gives the Robin condition g'(0) = (τ/2 - 1) g(0)
        self.tau = 3.0
        self.robin = KvbParameter(domain_basis=[HilbertElement([ExpPoly.monomial(np.sqrt(2.0), 0, 1.0)])],
                                  t_matrix=np.array([[self.tau]], dtype=complex))

    def test_friedrichs_has_rank_zero(self):
        """
        The Friedrichs extension is T = ∞: 𝒟(T) = {0} and the complement is all of ker S*.
        """
        extension = FriedrichsExtension(self.model)
        probes = extension.probes(np.random.default_rng(31), 3)
        parameter = self.reconstructor.reconstruct_T(extension, probes)
        self.assertEqual(parameter.rank(), 0)
        self.assertEqual(len(parameter.complement_basis), 1)

    @parameterized.expand([
        ("negative", -1.5),
        ("zero", 0.0),
        ("positive", 2.0),
    ])
    @pytest.mark.integration
    def test_salpha_eigenvalue(self, _name: str, alpha: float):
        """
        S_α has a rank one T with eigenvalue 2 + α.
        """
        extension = SAlphaExtension(alpha)
        probes = extension.probes(np.random.default_rng(32), 4)
        parameter = KvbReconstructor(extension.get_model()).reconstruct_T(extension, probes)
        self.assertEqual(parameter.rank(), 1)
        self.assertEqual(len(parameter.complement_basis), 1)
        self.assertAlmostEqual(float(parameter.eigenvalues()[0]), 2.0 + alpha, places=5)

    @parameterized.expand([
        ("two_points", (1e-4, 5e-5)),
        ("increasing", (5e-5, 1e-4, 2e-4)),
        ("repeated", (2e-4, 1e-4, 1e-4)),
    ])
    def test_bad_grid(self, _name: str, grid):
        """
        The ε grid needs three strictly decreasing points.
        """
        extension = FriedrichsExtension(self.model)
        with self.assertRaises(ValueError):
            self.reconstructor.reconstruct_T(extension, extension.probes(np.random.default_rng(1), 2), grid)

    def test_grid_out_of_range(self):
        """
        Grid points must be admissible ε values.
        """
        extension = FriedrichsExtension(self.model)
        with self.assertRaises(EpsOutOfRange):
            self.reconstructor.reconstruct_T(extension, extension.probes(np.random.default_rng(1), 2),
                                             (1.0, 1e-4, 5e-5))

    def test_no_probes(self):
        """
        reconstruct_T needs at least one probe.
        """
        with self.assertRaises(InsufficientProbes):
            self.reconstructor.reconstruct_T(FriedrichsExtension(self.model), [])

    @parameterized.expand([
        ("unit", 1.0),
        ("complex", 0.5 - 2.0j),
    ])
    def test_build_domain_vector(self, _name: str, coordinate: complex):
        """
        Built vectors satisfy the Robin condition of T and are members of S_T.
        """
        regular = self.model.closure_element(np.random.default_rng(33))
        element = self.reconstructor.build_kvb_domain_vector(self.robin, regular, [coordinate], [])
        value, derivative = element.get_channels()[0].boundary_values()
        self.assertAlmostEqual(value, np.sqrt(2.0) * coordinate, places=10)
        self.assertAlmostEqual(derivative, (self.tau / 2.0 - 1.0) * value, places=10)
        self.assertTrue(KvbExtension(self.model, self.robin).is_member(element))

    def test_build_domain_vector_checks(self):
        """
        Coordinate lists must fit the bases and f must be in the closure domain.
        """
        zero = HilbertElement.zeros(1)
        with self.assertRaises(DimensionMismatch):
            self.reconstructor.build_kvb_domain_vector(self.robin, zero, [1.0, 2.0], [])
        with self.assertRaises(NotInDomain):
            self.reconstructor.build_kvb_domain_vector(self.robin, HilbertElement([ExpPoly.monomial(1.0, 0, 2.0)]),
                                                       [1.0], [])

    def test_kvb_extension_probes(self):
        """
        Probes of S_T are members, and an element violating the condition is not.
        """
        extension = KvbExtension(self.model, self.robin)
        probes = extension.probes(np.random.default_rng(34), 4)
        self.assertEqual(len(probes), 4)
        for probe in probes:
            self.assertTrue(extension.is_member(probe))
        self.assertFalse(extension.is_member(HilbertElement([ExpPoly.monomial(1.0, 0, 1.0)])))
        self.assertEqual(extension.get_name(), "kvb(rank=1)")

    def test_parameter_to_dict(self):
        """
        The report form of T carries rank, matrix and eigenvalues.
        """
        data = self.robin.to_dict()
        self.assertEqual(data["rank"], 1)
        self.assertEqual(data["t_matrix"], [[[3.0, 0.0]]])
        self.assertAlmostEqual(data["eigenvalues"][0], 3.0)
        self.assertEqual(data["complement_dimension"], 0)
