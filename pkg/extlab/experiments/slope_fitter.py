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

import numpy as np

from scipy import stats

from extlab.experiments.slope_fit import SlopeFit


class SlopeFitter:
    """
    Ordinary least squares on (log ε, log value) with a 95% confidence half-width
    from the Student t distribution.
    """

    def __init__(self, slope_band: float = 0.1, noise_floor: float = 1e-11):
        """
        Constructor

        :param slope_band: Accepted distance between the fitted slope and the expected order
        :param noise_floor: Windows with any value below this are not fitted
        """
        self.slope_band: float = slope_band
        self.noise_floor: float = noise_floor

    def fit(self, quantity_id: str, eps_values: Sequence[float], values: Sequence[float],
            expected_order: int, window: str) -> SlopeFit:
        """
        :param quantity_id: The quantity being fitted
        :param eps_values: The ε values
        :param values: The measured values at those ε
        :param expected_order: The convergence order the quantity should show
        :param window: Description of the ε window, for the report
        :return: The SlopeFit
        """
        points: int = len(values)
        nan: float = float("nan")

        if points > 0 and min(values) < self.noise_floor:
            return SlopeFit(quantity_id, expected_order, nan, nan, nan, nan, points, window, "noise_floor")
        if points < 2:
            return SlopeFit(quantity_id, expected_order, nan, nan, nan, nan, points, window, "skipped")

        result = stats.linregress(np.log(np.asarray(eps_values, dtype=float)),
                                  np.log(np.asarray(values, dtype=float)))
        half_width: float = nan
        if points >= 3:
            half_width = float(stats.t.ppf(0.975, points - 2) * result.stderr)

        slope: float = float(result.slope)
        verdict: str = "pass" if abs(slope - expected_order) <= self.slope_band else "fail"
        return SlopeFit(quantity_id, expected_order, slope, float(result.intercept), float(result.stderr),
                        half_width, points, window, verdict)
