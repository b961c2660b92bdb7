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
from typing import List

from numpy.random import Generator

from extlab.interfaces.model import Model
from extlab.models.hilbert_element import HilbertElement


class Extension:
    """
    Interface for a self-adjoint extension of a Model's symmetric operator,
    given by a boundary-condition membership test on the adjoint domain.
    The extension acts as S* restricted to its members.
    """

    def get_name(self) -> str:
        """
        :return: The name of the extension
        """
        raise NotImplementedError

    def get_model(self) -> Model:
        """
        :return: The host model
        """
        raise NotImplementedError

    def is_member(self, element: HilbertElement) -> bool:
        """
        :param element: An element of the adjoint domain
        :return: True if the element is in the domain of the extension
        """
        raise NotImplementedError

    def apply(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: An element of the extension's domain
        :return: The extension applied to the element
        :raises NotInDomain: if the element is not a member
        """
        raise NotImplementedError

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        """
        :param rng: The seeded generator
        :param count: The number of probes wanted
        :return: Members of the extension's domain, enough of them to span the
                 deficiency images once count reaches the deficiency index
        """
        raise NotImplementedError
