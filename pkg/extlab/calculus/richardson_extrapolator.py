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
from typing import Sequence
from typing import Tuple

import numpy as np

from extlab.internals.errors.extrapolation_divergence import ExtrapolationDivergence


class RichardsonExtrapolator:
    """
    Two-point Richardson extrapolation to ε = 0 for quantities with an error
    of order ε, L = (ε₁ v(ε₂) - ε₂ v(ε₁)) / (ε₁ - ε₂).

    The last two grid points give the limit.  The previous pair gives a
    second limit and their difference is the error estimate.
    """

    DEFAULT_TOL: float = 1e-5

    def __init__(self, tolerance: float = DEFAULT_TOL):
        """
        Constructor

        :param tolerance: Largest accepted error estimate, relative to max(1, |limit|)
        """
        self.tolerance: float = tolerance

    @staticmethod
    def pair_limit(eps_pair: Tuple[float, float], value_pair: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
        """
        :param eps_pair: (ε₁, ε₂) with ε₁ != ε₂
        :param value_pair: (v(ε₁), v(ε₂))
        :return: The linear extrapolation of the pair to ε = 0
        """
        first_eps, second_eps = eps_pair
        first_value, second_value = value_pair
        return (first_eps * second_value - second_eps * first_value) / (first_eps - second_eps)

    def extrapolate(self, eps_grid: Sequence[float], values: Sequence[np.ndarray]) -> Tuple[np.ndarray, float]:
        """
        :param eps_grid: At least three ε values, strictly decreasing
        :param values: The array-valued quantity at each ε
        :return: A tuple of (limit, error estimate)
        :raises ExtrapolationDivergence: when the error estimate exceeds the tolerance
        """
        if len(eps_grid) < 3 or len(eps_grid) != len(values):
            raise ValueError("Richardson extrapolation needs at least three matching (eps, value) points")

        samples = [np.asarray(value, dtype=complex) for value in values]
        limit = self.pair_limit((eps_grid[-2], eps_grid[-1]), (samples[-2], samples[-1]))
        previous = self.pair_limit((eps_grid[-3], eps_grid[-2]), (samples[-3], samples[-2]))

        error: float = float(np.max(np.abs(limit - previous))) if limit.size > 0 else 0.0
        scale: float = max(1.0, float(np.max(np.abs(limit))) if limit.size > 0 else 0.0)
        if error > self.tolerance * scale:
            raise ExtrapolationDivergence("Richardson estimates disagree",
                                          {"error": error, "tolerance": self.tolerance * scale,
                                           "eps": list(eps_grid[-3:])})
        return limit, error
