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

from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.quadrature_norm import QuadratureNorm


class TestQuadratureNorm(TestCase):
    """
    Unit tests for the pointwise L² norm.
    """

    def test_agrees_with_exact_norm(self):
        """
        Quadrature and the exact Γ-integral norm agree on ordinary functions.
        """
        function = ExpPoly.monomial(1.0, 2, 0.7 + 2.0j) + ExpPoly.monomial(-3.0j, 0, 4.0)
        self.assertAlmostEqual(QuadratureNorm().residual_norm(function), function.norm(), places=12)

    def test_zero(self):
        """
        The zero function has norm 0.
        """
        self.assertEqual(QuadratureNorm().residual_norm(ExpPoly.zero()), 0.0)

    def test_cancelling_difference(self):
        """
        A small difference of large nearby exponentials keeps its relative accuracy.
        """
        eps = 1e-4
        big = 1.0 / eps
        difference = ExpPoly.monomial(big, 0, 1.0 + eps) - ExpPoly.monomial(big, 0, 1.0)
        # (e^{-(1+ε)x} - e^{-x}) / ε ≈ -x e^{-x}, whose norm is 1/2
        self.assertAlmostEqual(QuadratureNorm().residual_norm(difference), 0.5, places=3)
