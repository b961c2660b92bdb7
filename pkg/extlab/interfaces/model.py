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
from typing import Tuple

from numpy.random import Generator

from extlab.models.hilbert_element import HilbertElement


class Model:
    """
    Interface describing a symmetric operator S with 0 in the resolvent set of
    its closure and finite deficiency index, together with a distinguished
    self-adjoint extension S_D with bounded inverse.

    Everything the extension calculus needs goes through these methods,
    so a new model only has to supply its adjoint action, deficiency spaces,
    distinguished resolvent and boundary traces.
    """

    def get_name(self) -> str:
        """
        :return: The name the model is selected by
        """
        raise NotImplementedError

    def get_channel_count(self) -> int:
        """
        :return: The number of ExpPoly channels of an element
        """
        raise NotImplementedError

    def get_deficiency_index(self) -> int:
        """
        :return: The deficiency index d(S)
        """
        raise NotImplementedError

    def get_lower_bound(self) -> float:
        """
        :return: The lower bound m(S) of the symmetric operator.
                 1/m(S) bounds the norms of the inverses of the closure and of S_D.
        """
        raise NotImplementedError

    def apply_adjoint(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :return: S* applied to the element
        """
        raise NotImplementedError

    def apply_shifted(self, element: HilbertElement, z: complex) -> HilbertElement:
        """
        :param element: An element of the adjoint domain
        :param z: The spectral shift
        :return: (S* - z) applied to the element
        """
        raise NotImplementedError

    def deficiency_basis(self, z: complex) -> List[HilbertElement]:
        """
        :param z: A spectral point, 0 or off the real axis
        :return: An orthonormal basis of ker(S* - z)
        """
        raise NotImplementedError

    def distinguished_resolvent(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: Any element
        :return: S_D^{-1} applied to the element
        """
        raise NotImplementedError

    def shifted_resolvent(self, element: HilbertElement, z: complex) -> HilbertElement:
        """
        :param element: Any element
        :param z: 0 or ±iε
        :return: (S_D - z)^{-1} applied to the element
        """
        raise NotImplementedError

    def closure_solve(self, element: HilbertElement) -> HilbertElement:
        """
        :param element: An element of the range of the closure
        :return: The inverse of the closure applied to the element
        :raises NotInRange: when the element is not in that range
        """
        raise NotImplementedError

    def closure_membership(self, element: HilbertElement) -> bool:
        """
        :param element: An element of the adjoint domain
        :return: True if the element lies in the domain of the closure
        """
        raise NotImplementedError

    def boundary_trace(self, element: HilbertElement) -> Tuple[complex, ...]:
        """
        :param element: An element of the adjoint domain
        :return: The boundary values the model's boundary conditions are written in
        """
        raise NotImplementedError

    def random_element(self, rng: Generator) -> HilbertElement:
        """
        :param rng: The seeded generator
        :return: A random element of the adjoint domain
        """
        raise NotImplementedError

    def closure_element(self, rng: Generator) -> HilbertElement:
        """
        :param rng: The seeded generator
        :return: A random element of the domain of the closure
        """
        raise NotImplementedError
