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

import logging

from numpy.random import Generator

from extlab.interfaces.extension import Extension
from extlab.interfaces.model import Model
from extlab.internals.errors.not_in_domain import NotInDomain
from extlab.models.hilbert_element import HilbertElement


class AbstractExtension(Extension):
    """
    Common plumbing for Extensions: the action is always the adjoint's,
    guarded by the subclass membership test.
    """

    def __init__(self, name: str, model: Model):
        """
        Constructor

        :param name: The name of the extension
        :param model: The host model
        """
        self.name: str = name
        self.model: Model = model
        self.logger = logging.getLogger(self.__class__.__name__)

    def get_name(self) -> str:
        return self.name

    def get_model(self) -> Model:
        return self.model

    def is_member(self, element: HilbertElement) -> bool:
        raise NotImplementedError

    def apply(self, element: HilbertElement) -> HilbertElement:
        if not self.is_member(element):
            raise NotInDomain(f"Element is not in the domain of {self.name}",
                              {"trace": self.model.boundary_trace(element)})
        return self.model.apply_adjoint(element)

    def probes(self, rng: Generator, count: int) -> List[HilbertElement]:
        raise NotImplementedError
