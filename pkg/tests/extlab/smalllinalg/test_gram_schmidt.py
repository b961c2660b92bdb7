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

from extlab.exppoly.exp_poly import ExpPoly
from extlab.exppoly.exp_poly_term import ExpPolyTerm
from extlab.smalllinalg.gram_schmidt import GramSchmidt


class TestGramSchmidt(TestCase):
    """
    Unit tests for pivoted modified Gram-Schmidt over a callback inner product.
    """

    def test_orthonormal_result(self):
        """
        Random complex vectors come out orthonormal and spanning the same space.
        """
        rng = np.random.default_rng(3)
        vectors = list(rng.normal(size=(4, 6)) + 1j * rng.normal(size=(4, 6)))
        basis = GramSchmidt.orthonormalize(vectors, np.vdot)

        self.assertEqual(len(basis), 4)
        gram = GramSchmidt.gram(basis, np.vdot)
        self.assertLess(np.max(np.abs(gram - np.eye(4))), 1e-12)

        # Every input is reproduced by its projection onto the basis
        for vector in vectors:
            projection = sum(np.vdot(item, vector) * item for item in basis)
            self.assertLess(np.max(np.abs(projection - vector)), 1e-10)

    def test_dependent_vectors_dropped(self):
        """
        A linear combination of earlier vectors does not add a dimension.
        """
        first = np.array([1.0, 0.0, 1j])
        second = np.array([0.0, 2.0, 0.0])
        basis = GramSchmidt.orthonormalize([first, second, first - 3.0 * second], np.vdot)
        self.assertEqual(len(basis), 2)

    def test_empty_and_zero(self):
        """
        No vectors or only zero vectors give an empty basis.
        """
        self.assertEqual(GramSchmidt.orthonormalize([], np.vdot), [])
        self.assertEqual(GramSchmidt.orthonormalize([np.zeros(3)], np.vdot), [])

    def test_bad_tolerance(self):
        """
        rank_tol must be positive.
        """
        with self.assertRaises(ValueError):
            GramSchmidt.orthonormalize([np.ones(2)], np.vdot, 0.0)

    def test_gram_is_hermitian(self):
        """
        The Gram matrix has a real diagonal and conjugate-symmetric off-diagonal.
        """
        vectors = [np.array([1.0, 1j]), np.array([2.0, 1.0 - 1j])]
        gram = GramSchmidt.gram(vectors, np.vdot)
        self.assertAlmostEqual(gram[0, 0], 2.0)
        self.assertAlmostEqual(gram[0, 1], np.vdot(vectors[0], vectors[1]))
        self.assertAlmostEqual(gram[1, 0], np.conj(gram[0, 1]))
        self.assertAlmostEqual(GramSchmidt.norm(vectors[1], np.vdot), np.sqrt(6.0))

    @staticmethod
    def random_vectors(kind: str, seed: int, count: int):
        """
        :return: A tuple of (seeded vectors, their inner product) of the given kind
        """
        rng = np.random.default_rng(seed)
        if kind == "array":
            return list(rng.normal(size=(count, 7)) + 1j * rng.normal(size=(count, 7))), np.vdot
        functions = [ExpPoly(ExpPolyTerm(complex(rng.normal(), rng.normal()), int(rng.integers(0, 3)),
                                         complex(rng.uniform(0.5, 2.5), rng.uniform(-0.5, 0.5)))
                             for _ in range(3))
                     for _ in range(count)]
        return functions, ExpPoly.inner_product

    @parameterized.expand([
        ("array_pair", "array", 41, 2),
        ("array_five", "array", 42, 5),
        ("function_pair", "function", 43, 2),
        ("function_three", "function", 44, 3),
    ])
    def test_orthonormal_input_is_kept(self, _name: str, kind: str, seed: int, count: int):
        """
        Orthonormalizing an orthonormal list gives back the same vectors, up to order.
        """
        vectors, inner = self.random_vectors(kind, seed, count)
        basis = GramSchmidt.orthonormalize(vectors, inner)
        self.assertEqual(len(basis), count)

        again = GramSchmidt.orthonormalize(basis, inner)
        self.assertEqual(len(again), count)
        overlaps = np.abs(np.array([[inner(first, second) for second in basis] for first in again]))
        # A permutation matrix: every new vector is one old vector with unit phase
        np.testing.assert_allclose(np.sort(overlaps, axis=1)[:, -1], np.ones(count), atol=1e-10)
        np.testing.assert_allclose(np.sort(overlaps, axis=1)[:, :-1], 0.0, atol=1e-10)
        np.testing.assert_allclose(overlaps.sum(axis=0), np.ones(count), atol=1e-9)
        for first in again:
            match = max(basis, key=lambda second, vector=first: abs(inner(vector, second)))
            phase = complex(inner(match, first))
            self.assertAlmostEqual(abs(phase), 1.0, delta=1e-10)
            self.assertLess(GramSchmidt.norm(first - match * phase, inner), 1e-6)
