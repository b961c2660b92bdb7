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
from typing import Tuple

from extlab.models.channelwise_model import ChannelwiseModel
from extlab.models.hilbert_element import HilbertElement


class TwoHalfLinesModel(ChannelwiseModel):
    """
    The orthogonal sum of the half-line operator on L²(ℝ⁻) and on L²(ℝ⁺),
    with the left half-line stored reflected.  Deficiency index 2.
    """

    def __init__(self):
        """
        Constructor
        """
        super().__init__("twohalflines", 2)

    def boundary_trace(self, element: HilbertElement) -> Tuple[complex, ...]:
        """
        :param element: An element of the adjoint domain
        :return: (g_-(0), g_-'(0), g_+(0), g_+'(0)).
                 The left derivative changes sign under the reflection.
        """
        self.check_element(element)
        left_value, left_derivative = element.get_channels()[0].boundary_values()
        right_value, right_derivative = element.get_channels()[1].boundary_values()
        return left_value, -left_derivative, right_value, right_derivative
