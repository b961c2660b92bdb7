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


class HalfLineModel(ChannelwiseModel):
    """
    S = -d²/dx² + 1 on L² of the half-line with domain {f ∈ H² : f(0) = f'(0) = 0}.
    Deficiency index 1, ker S* spanned by e^{-x}.
    """

    def __init__(self):
        """
        Constructor
        """
        super().__init__("halfline", 1)

    def boundary_trace(self, element: HilbertElement) -> Tuple[complex, ...]:
        """
        :param element: An element of the adjoint domain
        :return: (g(0), g'(0))
        """
        self.check_element(element)
        return element.get_channels()[0].boundary_values()
