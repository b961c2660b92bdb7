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

from parameterized import parameterized

from extlab.calculus.decomposer import Decomposer
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm
from extlab.internals.errors.consistency_failure import ConsistencyFailure
from extlab.models.halfline_model import HalfLineModel
from extlab.models.hilbert_element import HilbertElement
from extlab.models.two_half_lines_model import TwoHalfLinesModel


class TestDecomposer(TestCase):
    """
    Unit tests for the von Neumann and relative decompositions of the adjoint domain.
    """

    @parameterized.expand([
        ("halfline_coarse", HalfLineModel(), 0.2),
        ("halfline_fine", HalfLineModel(), 1e-3),
        ("twohalflines", TwoHalfLinesModel(), 0.01),
    ])
    def test_von_neumann(self, _name: str, model, eps: float):
        """
        g = f_ε + u_ε - v_ε with f_ε in the closure domain.
        """
        element = model.random_element(np.random.default_rng(11))
        decomposition = Decomposer(model).decompose_vn(element, eps)
        rebuilt = decomposition.f_eps + decomposition.u_eps - decomposition.v_eps
        self.assertLess((element - rebuilt).residual_norm(), 1e-9 * max(1.0, element.norm()))
        self.assertTrue(model.closure_membership(decomposition.f_eps))
        self.assertEqual(decomposition.eps, eps)

    @parameterized.expand([
        ("halfline", HalfLineModel()),
        ("twohalflines", TwoHalfLinesModel()),
    ])
    def test_relative(self, _name: str, model):
        """
        g = f + S_D^{-1} u₁ + u₀ with u₀ = Γ₀ g and u₁ = Γ₁ g.
        """
        decomposer = Decomposer(model)
        element = model.random_element(np.random.default_rng(12))
        decomposition = decomposer.decompose_kvb(element)
        maps = decomposer.get_maps()
        self.assertTrue(model.closure_membership(decomposition.f))
        self.assertLess((decomposition.u0 - maps.gamma0(element)).residual_norm(), 1e-12)
        self.assertLess((decomposition.u1 - maps.gamma1(element)).residual_norm(), 1e-12)
        self.assertLess(model.apply_adjoint(decomposition.u0).residual_norm(), 1e-9)

    @parameterized.expand([
        ("coarse", 0.2),
        ("fine", 1e-4),
    ])
    def test_regular_input_has_no_deficiency_part(self, _name: str, eps: float):
        """
        An element with vanishing traces decomposes with u_ε = v_ε = 0 exactly.
        """
        element = HilbertElement([ExpPoly([ExpPolyTerm(1.0, 2, 1.0)])])
        decomposition = Decomposer(HalfLineModel()).decompose_vn(element, eps)
        self.assertTrue(decomposition.u_eps.is_zero())
        self.assertTrue(decomposition.v_eps.is_zero())
        self.assertTrue((decomposition.f_eps - element).is_zero())

    def test_broken_resolvent_is_caught(self):
        """
        The von Neumann reconstruction solves for f_ε independently, so a wrong resolvent fails it.
        """
        model = BrokenResolventModel()
        element = model.random_element(np.random.default_rng(13))
        with self.assertRaises(ConsistencyFailure):
            Decomposer(model).decompose_vn(element, 0.1)

    def test_broken_distinguished_resolvent_is_caught(self):
        """
        The relative reconstruction solves for f independently, so a wrong S_D^{-1} fails it.
        """
        model = BrokenResolventModel()
        element = model.random_element(np.random.default_rng(14))
        with self.assertRaises(ConsistencyFailure):
            Decomposer(model).decompose_kvb(element)


class BrokenResolventModel(HalfLineModel):
    """
    A half-line whose resolvents are off by a factor of two.
    """

    def shifted_resolvent(self, element: HilbertElement, z: complex) -> HilbertElement:
        return super().shifted_resolvent(element, z) * 2.0

    def distinguished_resolvent(self, element: HilbertElement) -> HilbertElement:
        return super().distinguished_resolvent(element) * 2.0
