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

from numpy.random import Generator

from extlab.exppoly.exp_poly import ExpPoly
from extlab.interfaces.model import Model
from extlab.models.abstract_extension import AbstractExtension
from extlab.models.channelwise_model import ChannelwiseModel
from extlab.models.hilbert_element import HilbertElement


class FriedrichsExtension(AbstractExtension):
    """
    The Friedrichs extension of a channel-wise model: Dirichlet condition
    g(0) = 0 on every channel.  For the shipped models it is also S_D.
    """

    def __init__(self, model: Model):
        """
        Constructor

        :param model: The host model
        """
        super().__init__("friedrichs", model)

    def is_member(self, element: HilbertElement) -> bool:
        tolerance: float = ChannelwiseModel.trace_tolerance(element)
        return all(abs(channel.boundary_values()[0]) <= tolerance for channel in element.get_channels())

    @staticmethod
    def clear_value(function: ExpPoly) -> ExpPoly:
        """
        :param function: Any ExpPoly
        :return: The function minus f(0) e^{-2x}, which vanishes at 0
        """
        value, _ = function.boundary_values()
        return function - ExpPoly.monomial(value, 0, 2.0)

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        return [self.model.random_element(rng).map(self.clear_value) for _ in range(count)]
