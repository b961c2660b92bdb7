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
from typing import Tuple

import numpy as np
from numpy.random import Generator

from extlab.exppoly.boundary_condition import BoundaryCondition
from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm
from extlab.exppoly.resolvent_solver import ResolventSolver
from extlab.interfaces.model import Model
from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange
from extlab.models.hilbert_element import HilbertElement


class ChannelwiseModel(Model):
    """
    Model for a direct sum of copies of the minimal half-line operator
    S = -d²/dx² + 1 with Dirichlet and Neumann traces vanishing at 0.

    Every operation reduces to the single half-line acting on each channel:
    S* is -d²/dx² + 1 on H², S_D is the Friedrichs (Dirichlet) extension
    and ker(S* - z) has one basis function e^{-x√(1-z)} per channel.
    Subclasses decide how channel traces are reported.
    """

    # Random adjoint-domain elements draw rates with real part in this range
    RANDOM_RATE_RANGE: Tuple[float, float] = (1.2, 3.0)
    RANDOM_TERMS: int = 3
    RANDOM_MAX_POWER: int = 2

    def __init__(self, name: str, channel_count: int):
        """
        Constructor

        :param name: The name the model is selected by
        :param channel_count: The number of half-lines
        """
        self.name: str = name
        self.channel_count: int = channel_count
        self.solver = ResolventSolver()

    def get_name(self) -> str:
        return self.name

    def get_channel_count(self) -> int:
        return self.channel_count

    def get_deficiency_index(self) -> int:
        return self.channel_count

    def get_lower_bound(self) -> float:
        return 1.0

    def check_element(self, element: HilbertElement):
        """
        :param element: An element to be used with this model
        :raises DimensionMismatch: if its channel count is not the model's
        """
        if element.channel_count() != self.channel_count:
            raise DimensionMismatch(f"Model {self.name} has {self.channel_count} channels,"
                                    f" element has {element.channel_count()}",
                                    {"expected": self.channel_count, "actual": element.channel_count()})

    def apply_adjoint(self, element: HilbertElement) -> HilbertElement:
        return self.apply_shifted(element, 0.0)

    def apply_shifted(self, element: HilbertElement, z: complex) -> HilbertElement:
        self.check_element(element)
        return element.map(lambda channel: channel.apply_shifted(z))

    @staticmethod
    def deficiency_rate(z: complex) -> complex:
        """
        :param z: A spectral point
        :return: The decay rate k = √(1 - z) on the principal branch
        :raises EpsOutOfRange: when z is on the essential spectrum [1, ∞)
        """
        shifted = complex(1.0 - z)
        if shifted.imag == 0.0 and shifted.real <= 0.0:
            raise EpsOutOfRange(f"Spectral point {z} lies on the essential spectrum", {"z": z})
        return complex(np.sqrt(shifted))

    def deficiency_basis(self, z: complex) -> List[HilbertElement]:
        rate: complex = self.deficiency_rate(z)
        normalized = ExpPoly.monomial(np.sqrt(2.0 * rate.real), 0, rate)
        return [HilbertElement.on_channel(normalized, channel, self.channel_count)
                for channel in range(self.channel_count)]

    def distinguished_resolvent(self, element: HilbertElement) -> HilbertElement:
        self.check_element(element)
        return element.map(lambda channel: self.solver.solve(channel, 0.0, BoundaryCondition.DIRICHLET))

    def shifted_resolvent(self, element: HilbertElement, z: complex) -> HilbertElement:
        """
        :param element: Any element
        :param z: 0 or ±iε
        :return: (S_D - z)^{-1} applied to the element
        """
        self.check_element(element)
        return element.map(lambda channel: self.solver.solve(channel, z, BoundaryCondition.DIRICHLET))

    def closure_solve(self, element: HilbertElement) -> HilbertElement:
        self.check_element(element)
        return element.map(lambda channel: self.solver.solve(channel, 0.0, BoundaryCondition.DOUBLE_ZERO))

    @staticmethod
    def trace_tolerance(element: HilbertElement) -> float:
        """
        :param element: The element whose traces are tested
        :return: The absolute tolerance for a vanishing trace
        """
        return ExpPoly.TRACE_TOL * max(1.0, element.max_coeff())

    def closure_membership(self, element: HilbertElement) -> bool:
        self.check_element(element)
        tolerance: float = self.trace_tolerance(element)
        for channel in element.get_channels():
            value, derivative = channel.boundary_values()
            if abs(value) > tolerance or abs(derivative) > tolerance:
                return False
        return True

    def boundary_trace(self, element: HilbertElement) -> Tuple[complex, ...]:
        raise NotImplementedError

    def random_function(self, rng: Generator) -> ExpPoly:
        """
        :param rng: The seeded generator
        :return: A random exponential polynomial with a few terms
        """
        low, high = self.RANDOM_RATE_RANGE
        terms: List[ExpPolyTerm] = []
        for _ in range(self.RANDOM_TERMS):
            coeff = complex(rng.normal(), rng.normal())
            power = int(rng.integers(0, self.RANDOM_MAX_POWER + 1))
            rate = complex(rng.uniform(low, high), rng.uniform(-0.5, 0.5))
            terms.append(ExpPolyTerm(coeff, power, rate))
        return ExpPoly(terms)

    def random_element(self, rng: Generator) -> HilbertElement:
        return HilbertElement(self.random_function(rng) for _ in range(self.channel_count))

    @staticmethod
    def clear_traces(function: ExpPoly) -> ExpPoly:
        """
        :param function: Any ExpPoly
        :return: The function corrected to have vanishing value and derivative at 0,
                 f - f(0)(2e^{-x} - e^{-2x}) - f'(0) x e^{-x}
        """
        value, derivative = function.boundary_values()
        value_fix = ExpPoly.monomial(2.0, 0, 1.0) - ExpPoly.monomial(1.0, 0, 2.0)
        derivative_fix = ExpPoly.monomial(1.0, 1, 1.0)
        return function - value_fix.scale(value) - derivative_fix.scale(derivative)

    def closure_element(self, rng: Generator) -> HilbertElement:
        return self.random_element(rng).map(self.clear_traces)
