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
from enum import Enum


class BoundaryCondition(Enum):
    """
    Boundary conditions at x = 0 understood by the ResolventSolver.
    """

    # u(0) = 0: the domain of the Friedrichs extension
    DIRICHLET = "dirichlet"

    # u(0) = u'(0) = 0: the domain of the operator closure
    DOUBLE_ZERO = "double_zero"
