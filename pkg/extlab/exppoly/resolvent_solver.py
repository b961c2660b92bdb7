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
from typing import Dict
from typing import List

import logging

import numpy as np

from extlab.exppoly.boundary_condition import BoundaryCondition
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.internals.errors.not_in_range import NotInRange


class ResolventSolver:
    """
    Decaying solutions of -u'' + (1 - z) u = f on the positive half-line for
    exponential-polynomial right hand sides.

    Each rate group P(x) e^{-λx} of f is handled by undetermined coefficients.
    With k = √(1 - z) on the principal branch, a group whose rate coincides
    with k is resonant and its polynomial degree goes up by one.
    The homogeneous solution e^{-kx} then fixes u(0) = 0.
    """

    # Largest |Im z| accepted off the real axis
    MAX_EPS: float = 0.5

    # |Re z| allowed for a point on the imaginary axis
    AXIS_TOL: float = 1e-12

    def __init__(self):
        """
        Constructor
        """
        self.logger = logging.getLogger(self.__class__.__name__)

    @staticmethod
    def check_spectral_point(z: complex):
        """
        :param z: A candidate spectral point
        :raises EpsOutOfRange: unless z = 0 or z = ±iε with 0 < ε <= MAX_EPS
        """
        z = complex(z)
        if z == 0:
            return
        if abs(z.real) <= ResolventSolver.AXIS_TOL and 0.0 < abs(z.imag) <= ResolventSolver.MAX_EPS:
            return
        raise EpsOutOfRange(f"Resolvent point {z} is not 0 or ±iε with 0 < ε <= {ResolventSolver.MAX_EPS}",
                            {"z": z})

    def solve(self, source: ExpPoly, z: complex = 0.0,
              condition: BoundaryCondition = BoundaryCondition.DIRICHLET) -> ExpPoly:
        """
        :param source: The right hand side f
        :param z: The spectral point
        :param condition: The boundary condition to impose at 0
        :return: The decaying u with (S* - z) u = f satisfying the boundary condition
        :raises EpsOutOfRange: for a spectral point outside the accepted set,
                    or a nonzero z with DOUBLE_ZERO
        :raises NotInRange: for DOUBLE_ZERO when f is not in the range of the closure
        """
        self.check_spectral_point(z)
        if condition == BoundaryCondition.DOUBLE_ZERO and complex(z) != 0:
            raise EpsOutOfRange("The closure is only inverted at z = 0", {"z": z})

        k_rate: complex = complex(np.sqrt(complex(1.0 - z)))
        terms: List[ExpPolyTerm] = []
        for rate, powers in source.by_rate().items():
            terms.extend(self.solve_rate_group(rate, powers, k_rate))

        particular = ExpPoly(terms)
        value, _ = particular.boundary_values()
        solution: ExpPoly = particular.add(ExpPoly.monomial(-value, 0, k_rate))

        if condition == BoundaryCondition.DOUBLE_ZERO:
            _, derivative = solution.boundary_values()
            scale: float = max(1.0, source.max_coeff())
            if abs(derivative) > ExpPoly.TRACE_TOL * scale:
                raise NotInRange("Source is not in the range of the closure: derivative trace does not vanish",
                                 {"derivative_trace": abs(derivative), "tolerance": ExpPoly.TRACE_TOL * scale})

        self.logger.debug("Solved resolvent at z=%s with %s: %d terms in, %d out",
                          z, condition.value, len(source.get_terms()), len(solution.get_terms()))
        return solution

    def solve_rate_group(self, rate: complex, powers: Dict[int, complex], k_rate: complex) -> List[ExpPolyTerm]:
        """
        Solves (k² - λ²) P + 2λ P' - P'' = Q for one rate λ.

        :param rate: The rate λ of the group
        :param powers: The polynomial Q as a dictionary of power -> coefficient
        :param k_rate: The decay rate k of the homogeneous solution
        :return: The terms of P(x) e^{-λx}
        """
        degree: int = max(powers.keys())
        source: List[complex] = [complex(powers.get(power, 0.0)) for power in range(degree + 1)]

        if ExpPoly.same_rate(rate, k_rate):
            # Resonance: the equation degenerates to 2λ P' - P'' = Q, raise the degree by one.
            # The group is moved onto the exact homogeneous rate.
            coeffs: List[complex] = [0j] * (degree + 3)
            for power in range(degree, -1, -1):
                coeffs[power + 1] = (source[power] + (power + 2) * (power + 1) * coeffs[power + 2]) \
                    / (2.0 * k_rate * (power + 1))
            self.logger.debug("Resonant rate %s, degree raised to %d", rate, degree + 1)
            return [ExpPolyTerm(coeffs[power], power, k_rate) for power in range(1, degree + 2)]

        shift: complex = k_rate * k_rate - rate * rate
        coeffs = [0j] * (degree + 3)
        for power in range(degree, -1, -1):
            coeffs[power] = (source[power] - 2.0 * rate * (power + 1) * coeffs[power + 1]
                             + (power + 2) * (power + 1) * coeffs[power + 2]) / shift
        return [ExpPolyTerm(coeffs[power], power, rate) for power in range(degree + 1)]
