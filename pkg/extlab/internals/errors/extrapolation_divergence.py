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
from extlab.internals.errors.extlab_error import ExtLabError


class ExtrapolationDivergence(ExtLabError):
    """
    Raised when the Richardson error estimate exceeds its tolerance.
    """
