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
from __future__ import annotations

from typing import Callable
from typing import Iterable
from typing import Tuple

import numpy as np

from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.quadrature_norm import QuadratureNorm


class HilbertElement:
    """
    A vector of the model Hilbert space as a tuple of ExpPoly channels.

    The single-channel case is L² of the half-line.  In the two-channel case
    channel 0 holds the left half-line function g_-(x) stored reflected,
    ǧ(x) = g_-(-x) on the positive half-line, and channel 1 holds g_+.
    Reflection is unitary, so the inner product is the channel-wise sum.
    """

    def __init__(self, channels: Iterable[ExpPoly]):
        """
        Constructor

        :param channels: The ExpPoly channels
        """
        self.channels: Tuple[ExpPoly, ...] = tuple(channels)

    @staticmethod
    def zeros(channel_count: int) -> HilbertElement:
        """
        :param channel_count: The number of channels
        :return: The zero vector
        """
        return HilbertElement([ExpPoly()] * channel_count)

    @staticmethod
    def on_channel(function: ExpPoly, channel: int, channel_count: int) -> HilbertElement:
        """
        :param function: The function to place
        :param channel: The index of the channel it lives on
        :param channel_count: The total number of channels
        :return: The vector with function on one channel and zero elsewhere
        """
        channels = [ExpPoly()] * channel_count
        channels[channel] = function
        return HilbertElement(channels)

    def get_channels(self) -> Tuple[ExpPoly, ...]:
        """
        :return: The channel tuple
        """
        return self.channels

    def channel_count(self) -> int:
        """
        :return: The number of channels
        """
        return len(self.channels)

    def map(self, operation: Callable[[ExpPoly], ExpPoly]) -> HilbertElement:
        """
        :param operation: A function to apply to every channel
        :return: The channel-wise image
        """
        return HilbertElement(operation(channel) for channel in self.channels)

    def is_zero(self) -> bool:
        """
        :return: True if every channel is the zero function
        """
        return all(channel.is_zero() for channel in self.channels)

    def max_coeff(self) -> float:
        """
        :return: The largest coefficient magnitude over all channels
        """
        return max(channel.max_coeff() for channel in self.channels)

    def inner_product(self, other: HilbertElement) -> complex:
        """
        :param other: Another element with the same channel count
        :return: ⟨self, other⟩ as the sum of channel inner products
        """
        return sum((mine.inner_product(theirs) for mine, theirs in zip(self.channels, other.channels)), 0j)

    def norm(self) -> float:
        """
        :return: The norm from the exact inner product
        """
        return float(np.sqrt(max(self.inner_product(self).real, 0.0)))

    def residual_norm(self, quadrature: QuadratureNorm = None) -> float:
        """
        :param quadrature: An optional QuadratureNorm to reuse
        :return: The norm evaluated pointwise; use for differences with large cancelling coefficients
        """
        use_quadrature: QuadratureNorm = quadrature
        if use_quadrature is None:
            use_quadrature = QuadratureNorm()
        squares = [use_quadrature.residual_norm(channel) ** 2 for channel in self.channels]
        return float(np.sqrt(sum(squares)))

    def __add__(self, other: HilbertElement) -> HilbertElement:
        return HilbertElement(mine.add(theirs) for mine, theirs in zip(self.channels, other.channels))

    def __sub__(self, other: HilbertElement) -> HilbertElement:
        return HilbertElement(mine - theirs for mine, theirs in zip(self.channels, other.channels))

    def __neg__(self) -> HilbertElement:
        return self.map(lambda channel: channel.scale(-1.0))

    def __mul__(self, scalar: complex) -> HilbertElement:
        return self.map(lambda channel: channel.scale(scalar))

    def __rmul__(self, scalar: complex) -> HilbertElement:
        return self.__mul__(scalar)

    def __repr__(self) -> str:
        return "HilbertElement(" + ", ".join(repr(channel) for channel in self.channels) + ")"
