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

import numpy as np

from numpy.random import Generator

from extlab.exppoly.exp_poly import ExpPoly
from extlab.interfaces.model import Model
from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.models.abstract_extension import AbstractExtension
from extlab.models.channelwise_model import ChannelwiseModel
from extlab.models.hilbert_element import HilbertElement
from extlab.models.two_half_lines_model import TwoHalfLinesModel


class SAlphaExtension(AbstractExtension):
    """
    The point interaction on the line glued from two half-lines:

        g_+(0) = g_-(0) =: g₀    and    g_+'(0) - g_-'(0) = α g₀
    """

    def __init__(self, alpha: float, model: Model = None):
        """
        Constructor

        :param alpha: The coupling α
        :param model: The host model.  Defaults to a new TwoHalfLinesModel.
        :raises ValueError: when α is not finite
        """
        if not np.isfinite(alpha):
            raise ValueError(f"The coupling alpha must be finite, got {alpha}")
        use_model: Model = model
        if use_model is None:
            use_model = TwoHalfLinesModel()
        if use_model.get_channel_count() != 2:
            raise DimensionMismatch("The S_alpha family lives on the two half-line model",
                                    {"channels": use_model.get_channel_count()})
        super().__init__(f"salpha:{alpha:g}", use_model)
        self.alpha: float = float(alpha)

    def get_alpha(self) -> float:
        """
        :return: The coupling α
        """
        return self.alpha

    def is_member(self, element: HilbertElement) -> bool:
        left_value, left_derivative, right_value, right_derivative = self.model.boundary_trace(element)
        tolerance: float = ChannelwiseModel.trace_tolerance(element)
        if abs(right_value - left_value) > tolerance:
            return False
        jump = right_derivative - left_derivative
        return abs(jump - self.alpha * right_value) <= tolerance * max(1.0, abs(self.alpha))

    def enforce(self, element: HilbertElement) -> HilbertElement:
        """
        Corrects the right channel of an element so that it meets the matching conditions.

        :param element: Any element of the two half-line model
        :return: A member of the domain
        """
        left, right = element.get_channels()
        left_value, _, right_value, _ = self.model.boundary_trace(element)

        # Match values with e^{-2x}, then the derivative jump with x e^{-x}
        right = right + ExpPoly.monomial(left_value - right_value, 0, 2.0)
        _, left_derivative, value, right_derivative = self.model.boundary_trace(HilbertElement([left, right]))
        jump_fix = self.alpha * value - (right_derivative - left_derivative)
        right = right + ExpPoly.monomial(jump_fix, 1, 1.0)
        return HilbertElement([left, right])

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        return [self.enforce(self.model.random_element(rng)) for _ in range(count)]
