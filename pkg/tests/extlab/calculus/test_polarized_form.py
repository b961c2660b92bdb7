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
from unittest import TestCase

import numpy as np

from parameterized import parameterized

from extlab.calculus.polarized_form import PolarizedForm


class TestPolarizedForm(TestCase):
    """
    Unit tests for recovering a sesquilinear form from its diagonal.
    """

    @parameterized.expand([
        ("square", 3, 3),
        ("tall", 4, 2),
        ("single", 1, 5),
    ])
    def test_recovers_inner_products(self, _name: str, count: int, dimension: int):
        """
        The polarized matrix of q(c) = ⟨Σ c a, Σ c b⟩ has entries ⟨a_p, b_q⟩.
        """
        rng = np.random.default_rng(count * 10 + dimension)
        left = rng.normal(size=(count, dimension)) + 1j * rng.normal(size=(count, dimension))
        right = rng.normal(size=(count, dimension)) + 1j * rng.normal(size=(count, dimension))
        matrix = PolarizedForm.from_data(list(left), list(right)).matrix(count)
        np.testing.assert_allclose(matrix, left.conj() @ right.T, atol=1e-12)

    def test_quadratic_callable(self):
        """
        Any quadratic form can be polarized.
        """
        hermitian = np.array([[2.0, 1j], [-1j, 3.0]])
        form = PolarizedForm(lambda combination: complex(np.vdot(combination, hermitian @ combination)))
        np.testing.assert_allclose(form.matrix(2), hermitian, atol=1e-12)
        self.assertAlmostEqual(form.element(2, 0, 1), 1j)
