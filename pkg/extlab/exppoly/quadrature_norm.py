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

from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm


class QuadratureNorm:
    """
    Pointwise L² norms of exponential polynomials on a composite Gauss-Legendre grid.

    Differences of ε-dependent vectors carry coefficients of size 1/ε that cancel
    to a small function.  The exact Gram form squares those coefficients before
    cancelling, losing about 1/ε² of relative precision.  Summing |f(x)|² over
    quadrature nodes cancels at the level of function values instead.
    """

    NODES_PER_PANEL: int = 16

    # Truncate at the point where the slowest rate has decayed by e^{-CUTOFF}
    CUTOFF: float = 45.0

    def __init__(self):
        """
        Constructor
        """
        self.base_nodes, self.base_weights = np.polynomial.legendre.leggauss(self.NODES_PER_PANEL)

    def grid(self, function: ExpPoly) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param function: The function to be integrated
        :return: A tuple of (nodes, weights) on the truncated half-line
        """
        real_rates = [term.rate.real for term in function.get_terms()]
        fastest: float = max(abs(term.rate) for term in function.get_terms())
        length: float = self.CUTOFF / min(real_rates)

        # Panels of width at most 1/|λ|max
        panels: int = max(1, int(np.ceil(length * fastest)))
        edges: np.ndarray = np.linspace(0.0, length, panels + 1)
        half_width: float = 0.5 * (edges[1] - edges[0])

        nodes: np.ndarray = (0.5 * (edges[:-1] + edges[1:]))[:, None] + half_width * self.base_nodes[None, :]
        weights: np.ndarray = np.broadcast_to(half_width * self.base_weights, nodes.shape)
        return nodes.ravel(), weights.ravel()

    def residual_norm(self, function: ExpPoly) -> float:
        """
        :param function: The function to measure
        :return: Its L² norm, evaluated pointwise
        """
        if function.is_zero():
            return 0.0
        nodes, weights = self.grid(function)
        values: np.ndarray = function.evaluate(nodes)
        return float(np.sqrt(np.sum(weights * np.abs(values) ** 2)))

    def covering_grid(self, rates: Sequence[complex]) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param rates: Decay rates, each with positive real part
        :return: A (nodes, weights) grid fit for any function built from those rates
        """
        return self.grid(ExpPoly([ExpPolyTerm(1.0, 0, complex(rate)) for rate in rates]))

    @staticmethod
    def weighted_values(function: ExpPoly, nodes: np.ndarray, weights: np.ndarray) -> np.ndarray:
        """
        :return: √w·f at the nodes, so that the Euclidean norm of a difference
                 of such arrays is the L² norm of the difference of the functions
        """
        return np.sqrt(weights) * function.evaluate(nodes)
