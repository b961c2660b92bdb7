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
import logging

from extlab.calculus.kvb_extension import KvbExtension
from extlab.calculus.kvb_parameter import KvbParameter
from extlab.calculus.kvb_reconstructor import KvbReconstructor
from extlab.calculus.vn_extension import VnExtension
from extlab.calculus.vn_parameter import VnParameter
from extlab.calculus.vn_reconstructor import VnReconstructor
from extlab.interfaces.model import Model
from extlab.internals.errors.eps_out_of_range import EpsOutOfRange


class ParameterTranslator:
    """
    Converts between the two parametrisations of the self-adjoint extensions of a model
    by building the extension of one parameter and reconstructing the other from it.
    """

    def __init__(self, model: Model, vn_reconstructor: VnReconstructor = None,
                 kvb_reconstructor: KvbReconstructor = None):
        """
        Constructor

        :param model: The model
        :param vn_reconstructor: Optional VnReconstructor to use
        :param kvb_reconstructor: Optional KvbReconstructor to use
        """
        self.model: Model = model
        self.vn_reconstructor: VnReconstructor = vn_reconstructor
        if self.vn_reconstructor is None:
            self.vn_reconstructor = VnReconstructor(model)
        self.kvb_reconstructor: KvbReconstructor = kvb_reconstructor
        if self.kvb_reconstructor is None:
            self.kvb_reconstructor = KvbReconstructor(model)
        self.logger = logging.getLogger(self.__class__.__name__)

    def kvb_to_vn(self, kvb: KvbParameter, z: complex) -> VnParameter:
        """
        :param kvb: The parameter T
        :param z: A point with Im z > 0
        :return: The unitary U at z of the same extension
        """
        if complex(z).imag <= 0.0:
            raise EpsOutOfRange(f"kvb_to_vn needs Im z > 0, got {z}", {"z": z})
        extension = KvbExtension(self.model, kvb)
        probes = extension.basis_probes()
        self.logger.debug("Translating T of rank %d to U at z=%s with %d probes", kvb.rank(), z, len(probes))
        return self.vn_reconstructor.reconstruct_U(extension, z, probes)

    def vn_to_kvb(self, vn: VnParameter, eps_grid=KvbReconstructor.DEFAULT_EPS_GRID) -> KvbParameter:
        """
        :param vn: The parameter U
        :param eps_grid: The ε grid for the limit route
        :return: The parameter T of the same extension
        """
        extension = VnExtension(self.model, vn)
        return self.kvb_reconstructor.reconstruct_T(extension, extension.basis_probes(), eps_grid)
