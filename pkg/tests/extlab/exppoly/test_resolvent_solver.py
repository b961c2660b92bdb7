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

from extlab.exppoly.boundary_condition import BoundaryCondition
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm
from extlab.exppoly.quadrature_norm import QuadratureNorm
from extlab.exppoly.resolvent_solver import ResolventSolver
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.internals.errors.not_in_range import NotInRange


class TestResolventSolver(TestCase):
    """
    Unit tests for the undetermined-coefficients resolvent solver.
    """

    SOURCE = ExpPoly([ExpPolyTerm(1.0 - 0.5j, 0, 2.0), ExpPolyTerm(0.25, 2, 1.5 + 0.3j),
                      ExpPolyTerm(-1.0j, 1, 3.0 - 0.1j)])

    def setUp(self):
        self.solver = ResolventSolver()
        self.quadrature = QuadratureNorm()

    def test_dirichlet_closed_form(self):
        """
        S_D^{-1} e^{-2x} = (e^{-x} - e^{-2x}) / 3.
        """
        solution = self.solver.solve(ExpPoly.monomial(1.0, 0, 2.0))
        expected = ExpPoly.monomial(1.0 / 3.0, 0, 1.0) - ExpPoly.monomial(1.0 / 3.0, 0, 2.0)
        self.assertLess((solution - expected).norm(), 1e-14)

    def test_resonant(self):
        """
        S_D^{-1} e^{-x} = x e^{-x} / 2, the source rate coincides with the homogeneous one.
        """
        solution = self.solver.solve(ExpPoly.monomial(1.0, 0, 1.0))
        self.assertLess((solution - ExpPoly.monomial(0.5, 1, 1.0)).norm(), 1e-14)

    @parameterized.expand([
        ("zero", 0.0),
        ("small_up", 1e-3j),
        ("small_down", -1e-3j),
        ("tenth_up", 0.1j),
        ("half_down", -0.5j),
    ])
    def test_residual(self, _name: str, z: complex):
        """
        (S* - z) u = f and u(0) = 0 at every accepted spectral point.
        """
        solution = self.solver.solve(self.SOURCE, z)
        residual = self.quadrature.residual_norm(solution.apply_shifted(z) - self.SOURCE)
        self.assertLess(residual, 1e-10)
        self.assertLess(abs(solution.boundary_values()[0]), 1e-12)

    def test_resonant_off_axis(self):
        """
        A source on the homogeneous rate √(1 - iε) raises the degree and still solves.
        """
        z = 0.1j
        rate = complex(np.sqrt(1.0 - z))
        source = ExpPoly.monomial(1.0, 1, rate)
        solution = self.solver.solve(source, z)
        self.assertEqual(max(term.power for term in solution.get_terms()), 2)
        self.assertLess(self.quadrature.residual_norm(solution.apply_shifted(z) - source), 1e-10)

    def test_double_zero(self):
        """
        The closure inverse recovers a function with vanishing value and derivative.
        """
        regular = ExpPoly.monomial(1.0, 2, 1.0)
        recovered = self.solver.solve(regular.apply_shifted(0.0), 0.0, BoundaryCondition.DOUBLE_ZERO)
        self.assertLess((recovered - regular).norm(), 1e-12)

    def test_not_in_range(self):
        """
        e^{-2x} is not in the range of the closure.
        """
        with self.assertRaises(NotInRange):
            self.solver.solve(ExpPoly.monomial(1.0, 0, 2.0), 0.0, BoundaryCondition.DOUBLE_ZERO)

    @parameterized.expand([
        ("real", 0.5),
        ("too_far", 0.6j),
        ("off_axis", 1e-3 + 0.1j),
    ])
    def test_rejected_points(self, _name: str, z: complex):
        """
        Only 0 and ±iε with 0 < ε <= 0.5 are accepted.
        """
        with self.assertRaises(EpsOutOfRange):
            self.solver.solve(self.SOURCE, z)

    def test_double_zero_needs_zero(self):
        """
        The closure is only inverted at z = 0.
        """
        with self.assertRaises(EpsOutOfRange):
            self.solver.solve(self.SOURCE, 0.1j, BoundaryCondition.DOUBLE_ZERO)
