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

from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.internals.errors.not_hermitian import NotHermitian
from extlab.smalllinalg.hermitian_eigen import HermitianEigen


class TestHermitianEigen(TestCase):
    """
    Unit tests for the cyclic Jacobi eigensolver.
    """

    @staticmethod
    def random_hermitian(size: int, seed: int) -> np.ndarray:
        rng = np.random.default_rng(seed)
        raw = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
        return 0.5 * (raw + raw.conj().T)

    @parameterized.expand([
        ("one", 1),
        ("two", 2),
        ("four", 4),
        ("nine", 9),
        ("thirty_two", 32),
    ])
    def test_matches_numpy(self, _name: str, size: int):
        """
        Eigenvalues agree with numpy's and the eigenvectors rebuild the matrix.
        """
        matrix = self.random_hermitian(size, seed=size)
        values, vectors = HermitianEigen.solve(matrix)

        np.testing.assert_allclose(values, np.linalg.eigvalsh(matrix), atol=1e-9)
        rebuilt = vectors @ np.diag(values) @ vectors.conj().T
        self.assertLess(np.max(np.abs(rebuilt - matrix)), 1e-9)
        self.assertLess(np.max(np.abs(vectors.conj().T @ vectors - np.eye(size))), 1e-9)

    def test_ascending_order(self):
        """
        Eigenvalues come out ascending, eigenvectors in matching columns.
        """
        matrix = np.diag([3.0, -1.0, 2.0])
        values, vectors = HermitianEigen.solve(matrix)
        np.testing.assert_allclose(values, [-1.0, 2.0, 3.0])
        self.assertAlmostEqual(abs(vectors[1, 0]), 1.0)

    def test_complex_two_by_two(self):
        """
        [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        """
        values, _ = HermitianEigen.solve(np.array([[2.0, 1j], [-1j, 2.0]]))
        np.testing.assert_allclose(values, [1.0, 3.0], atol=1e-12)

    def test_empty(self):
        """
        A 0 x 0 matrix has no eigenvalues.
        """
        values, vectors = HermitianEigen.solve(np.zeros((0, 0)))
        self.assertEqual(values.shape, (0,))
        self.assertEqual(vectors.shape, (0, 0))

    def test_not_hermitian(self):
        """
        A visibly non-Hermitian matrix is rejected.
        """
        with self.assertRaises(NotHermitian):
            HermitianEigen.solve(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_not_square(self):
        """
        A rectangular matrix is a dimension mismatch.
        """
        with self.assertRaises(DimensionMismatch):
            HermitianEigen.solve(np.zeros((2, 3)))

    def test_singular_values(self):
        """
        Singular values match numpy's for a rectangular complex matrix.
        """
        rng = np.random.default_rng(7)
        matrix = rng.normal(size=(5, 3)) + 1j * rng.normal(size=(5, 3))
        np.testing.assert_allclose(HermitianEigen.singular_values(matrix),
                                   np.linalg.svd(matrix, compute_uv=False), atol=1e-9)

    def test_pseudo_inverse(self):
        """
        The pseudo-inverse of a full column rank matrix is a left inverse.
        """
        rng = np.random.default_rng(11)
        matrix = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
        inverse = HermitianEigen.pseudo_inverse(matrix)
        self.assertLess(np.max(np.abs(inverse @ matrix - np.eye(2))), 1e-9)
        self.assertLess(np.max(np.abs(inverse - np.linalg.pinv(matrix))), 1e-9)
