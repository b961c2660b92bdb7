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

from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.exppoly.exp_poly import ExpPoly
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.internals.errors.insufficient_probes import InsufficientProbes
from extlab.internals.errors.not_in_domain import NotInDomain
from extlab.models.friedrichs_extension import FriedrichsExtension
from extlab.models.halfline_model import HalfLineModel
from extlab.models.hilbert_element import HilbertElement
from extlab.models.salpha_extension import SAlphaExtension


class TestVnReconstructor(TestCase):
    """
    Unit tests for reconstructing the von Neumann unitary from domain probes.
    """

    def setUp(self):
        self.model = HalfLineModel()
        self.extension = FriedrichsExtension(self.model)
        self.reconstructor = VnReconstructor(self.model)
        self.probes = self.extension.probes(np.random.default_rng(21), 3)

    @parameterized.expand([
        ("small", 0.01j),
        ("large", 0.4j),
    ])
    def test_friedrichs_is_identity(self, _name: str, z: complex):
        """
        In the normalized bases the Friedrichs extension of the half-line has U = 1.
        """
        parameter = self.reconstructor.reconstruct_U(self.extension, z, self.probes)
        self.assertEqual(parameter.dimension(), 1)
        self.assertLess(abs(parameter.matrix[0, 0] - 1.0), 1e-8)
        self.assertLessEqual(parameter.unitarity_residual(), VnReconstructor.UNITARY_TOL)
        self.assertIsNotNone(parameter.theta)

    @pytest.mark.integration
    def test_salpha_is_unitary(self):
        """
        The point interaction gives a 2 x 2 unitary without a scalar phase.
        """
        extension = SAlphaExtension(-1.0)
        probes = extension.probes(np.random.default_rng(22), 4)
        parameter = VnReconstructor(extension.get_model()).reconstruct_U(extension, 0.1j, probes)
        self.assertEqual(parameter.dimension(), 2)
        self.assertLessEqual(parameter.unitarity_residual(), VnReconstructor.UNITARY_TOL)
        self.assertIsNone(parameter.theta)

    def test_lower_half_plane_rejected(self):
        """
        z must have positive imaginary part.
        """
        with self.assertRaises(EpsOutOfRange):
            self.reconstructor.reconstruct_U(self.extension, -0.1j, self.probes)
        with self.assertRaises(EpsOutOfRange):
            self.reconstructor.reconstruct_U(self.extension, 0.5, self.probes)

    def test_no_probes(self):
        """
        An empty probe list cannot span the deficiency space.
        """
        with self.assertRaises(InsufficientProbes):
            self.reconstructor.reconstruct_U(self.extension, 0.1j, [])

    def test_non_member_probe(self):
        """
        Probes outside the domain are rejected.
        """
        outside = HilbertElement([ExpPoly.monomial(1.0, 0, 2.0)])
        with self.assertRaises(NotInDomain):
            self.reconstructor.reconstruct_U(self.extension, 0.1j, [outside])

    def test_vn_components(self):
        """
        g = f_ε + u_ε - U_ε u_ε with f_ε in the closure domain.
        """
        probe = self.probes[0]
        u_eps, unitary_u, f_eps = self.reconstructor.vn_components(self.extension, probe, 0.05)
        self.assertLess((probe - (f_eps + u_eps - unitary_u)).residual_norm(), 1e-10)
        self.assertTrue(self.model.closure_membership(f_eps))
