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

from extlab.models.hilbert_element import HilbertElement


@dataclass(frozen=True)
class KvbDecomposition:
    """
    g = f + S_D^{-1} u1 + u0 with f in the domain of the closure and u0, u1 in ker S*.
    Here u0 = Γ₀g and u1 = Γ₁g.
    """

    f: HilbertElement
    u1: HilbertElement
    u0: HilbertElement
