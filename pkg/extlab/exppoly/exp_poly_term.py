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
from dataclasses import dataclass


@dataclass(frozen=True)
class ExpPolyTerm:
    """
    One term c x^m e^{-λx} of an exponential polynomial on the positive half-line.
    """

    coeff: complex
    power: int
    rate: complex

    def __post_init__(self):
        if self.power < 0:
            raise ValueError(f"ExpPolyTerm power must be nonnegative, got {self.power}")
        if complex(self.rate).real <= 0.0:
            raise ValueError(f"ExpPolyTerm rate must have positive real part, got {self.rate}")

    def sort_key(self):
        """
        :return: The canonical ordering key (Re rate, Im rate, power)
        """
        rate = complex(self.rate)
        return (rate.real, rate.imag, self.power)
