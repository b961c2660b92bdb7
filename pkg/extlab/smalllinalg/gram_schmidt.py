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
from typing import Any
from typing import Callable
from typing import List
from typing import Sequence

import numpy as np

InnerProduct = Callable[[Any, Any], complex]


class GramSchmidt:
    """
    Gram matrices and pivoted modified Gram-Schmidt over an abstract inner product.

    Vectors can be anything supporting subtraction and multiplication by a
    complex scalar: numpy coordinate arrays, ExpPoly functions, HilbertElements.
    The inner product callback is conjugate-linear in its first slot.
    """

    DEFAULT_RANK_TOL: float = 1e-10

    @staticmethod
    def gram(vectors: Sequence[Any], inner: InnerProduct) -> np.ndarray:
        """
        :param vectors: The vectors whose Gram matrix is wanted
        :param inner: The inner product callback
        :return: The Hermitian matrix G with G[i, j] = inner(v_i, v_j)
        """
        size: int = len(vectors)
        matrix: np.ndarray = np.zeros((size, size), dtype=complex)
        for i in range(size):
            matrix[i, i] = complex(inner(vectors[i], vectors[i])).real
            for j in range(i + 1, size):
                value: complex = complex(inner(vectors[i], vectors[j]))
                matrix[i, j] = value
                matrix[j, i] = np.conj(value)
        return matrix

    @staticmethod
    def norm(vector: Any, inner: InnerProduct) -> float:
        """
        :param vector: The vector to measure
        :param inner: The inner product callback
        :return: The induced norm
        """
        return float(np.sqrt(max(complex(inner(vector, vector)).real, 0.0)))

    @staticmethod
    def orthonormalize(vectors: Sequence[Any], inner: InnerProduct,
                       rank_tol: float = DEFAULT_RANK_TOL) -> List[Any]:
        """
        Pivoted modified Gram-Schmidt.

        At every step the remaining vector with the largest residual is taken next.
        The process stops once every residual is below rank_tol times the largest
        input norm; those directions are considered linearly dependent.

        :param vectors: The spanning vectors
        :param inner: The inner product callback
        :param rank_tol: Relative rank tolerance
        :return: An orthonormal list spanning the same subspace
        """
        if rank_tol <= 0.0:
            raise ValueError(f"rank_tol must be positive, got {rank_tol}")

        remaining: List[Any] = list(vectors)
        if len(remaining) == 0:
            return []

        largest: float = max(GramSchmidt.norm(vector, inner) for vector in remaining)
        threshold: float = rank_tol * largest
        basis: List[Any] = []

        while len(remaining) > 0:
            residual_norms: List[float] = [GramSchmidt.norm(vector, inner) for vector in remaining]
            pivot: int = int(np.argmax(residual_norms))
            if residual_norms[pivot] <= threshold:
                break

            candidate: Any = remaining.pop(pivot) * (1.0 / residual_norms[pivot])

            # One pass of reorthogonalization against what we already have
            for existing in basis:
                candidate = candidate - existing * complex(inner(existing, candidate))
            candidate = candidate * (1.0 / GramSchmidt.norm(candidate, inner))

            basis.append(candidate)
            remaining = [vector - candidate * complex(inner(candidate, vector)) for vector in remaining]

        return basis
