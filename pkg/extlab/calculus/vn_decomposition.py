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
class VnDecomposition:
    """
    g = f_eps + u_eps - v_eps with f_eps in the domain of the closure,
    u_eps in ker(S* - iε) and v_eps in ker(S* + iε).
    """

    f_eps: HilbertElement
    u_eps: HilbertElement
    v_eps: HilbertElement
    eps: float
