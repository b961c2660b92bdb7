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
from typing import Tuple

import logging

import numpy as np

from extlab.internals.errors.dimension_mismatch import DimensionMismatch
from extlab.internals.errors.not_hermitian import NotHermitian


class HermitianEigen:
    """
    Cyclic Jacobi eigensolver for small dense complex Hermitian matrices.

    Dimensions handled here are tiny (Gram matrices of deficiency vectors
    and probe images), so each rotation is applied to the two affected
    rows and columns directly and sweeps continue until the off-diagonal
    mass is at round-off level.
    """

    SYMMETRY_TOL: float = 1e-10
    OFF_DIAGONAL_TOL: float = 1e-15
    MAX_SWEEPS: int = 100

    @staticmethod
    def check_hermitian(matrix: np.ndarray) -> np.ndarray:
        """
        :param matrix: A candidate Hermitian matrix
        :return: The symmetrized complex copy (M + Mᴴ)/2 of the input
        :raises DimensionMismatch: if the matrix is not square
        :raises NotHermitian: if max|M − Mᴴ| exceeds SYMMETRY_TOL·max|M|
        """
        use_matrix: np.ndarray = np.array(matrix, dtype=complex)
        if use_matrix.ndim != 2 or use_matrix.shape[0] != use_matrix.shape[1]:
            raise DimensionMismatch(f"Hermitian routines need a square matrix, got shape {use_matrix.shape}",
                                    {"shape": use_matrix.shape})
        if use_matrix.size == 0:
            return use_matrix

        scale: float = float(np.max(np.abs(use_matrix)))
        asymmetry: float = float(np.max(np.abs(use_matrix - use_matrix.conj().T)))
        if asymmetry > HermitianEigen.SYMMETRY_TOL * scale:
            raise NotHermitian("Matrix is not Hermitian within tolerance",
                               {"asymmetry": asymmetry, "scale": scale})

        return 0.5 * (use_matrix + use_matrix.conj().T)

    @staticmethod
    def solve(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param matrix: A square Hermitian matrix
        :return: A tuple of (eigenvalues, eigenvectors) where eigenvalues is a real
                array in ascending order and eigenvectors holds the corresponding
                orthonormal eigenvectors as columns.
        """
        work: np.ndarray = HermitianEigen.check_hermitian(matrix)
        size: int = work.shape[0]
        vectors: np.ndarray = np.eye(size, dtype=complex)
        if size == 0:
            return np.zeros(0), vectors

        scale: float = float(np.linalg.norm(work))
        sweeps: int = 0
        while sweeps < HermitianEigen.MAX_SWEEPS:
            off_diagonal: float = float(np.linalg.norm(work - np.diag(np.diag(work))))
            if off_diagonal <= HermitianEigen.OFF_DIAGONAL_TOL * scale * size:
                break
            for p_index in range(size - 1):
                for q_index in range(p_index + 1, size):
                    HermitianEigen.rotate(work, vectors, p_index, q_index)
            sweeps += 1

        if sweeps == HermitianEigen.MAX_SWEEPS:
            logging.getLogger("HermitianEigen").warning("Jacobi iteration hit %d sweeps on a %dx%d matrix",
                                                        sweeps, size, size)

        eigenvalues: np.ndarray = np.real(np.diag(work)).copy()
        order: np.ndarray = np.argsort(eigenvalues, kind="stable")
        return eigenvalues[order], vectors[:, order]

    @staticmethod
    def rotate(work: np.ndarray, vectors: np.ndarray, p_index: int, q_index: int):
        """
        Applies one complex Jacobi rotation in place, annihilating work[p, q].

        The off-diagonal entry is first made real by a diagonal phase, after which
        the classical real rotation with tan θ = t, t the smaller root of
        t² + 2τt − 1 = 0, τ = (a_qq − a_pp)/(2|a_pq|), zeroes it.

        :param work: The matrix being diagonalized
        :param vectors: The accumulated eigenvector matrix
        :param p_index: First pivot index
        :param q_index: Second pivot index
        """
        off: complex = work[p_index, q_index]
        magnitude: float = abs(off)
        if magnitude <= np.finfo(float).tiny:
            return

        phase: complex = off / magnitude
        tau: float = (work[q_index, q_index].real - work[p_index, p_index].real) / (2.0 * magnitude)
        if tau == 0.0:
            tangent: float = 1.0
        else:
            tangent = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
        cosine: float = 1.0 / np.sqrt(1.0 + tangent * tangent)
        sine: float = tangent * cosine

        block: np.ndarray = np.array([[cosine, sine],
                                      [-sine * np.conj(phase), cosine * np.conj(phase)]], dtype=complex)
        pair = [p_index, q_index]
        work[:, pair] = work[:, pair] @ block
        work[pair, :] = block.conj().T @ work[pair, :]
        vectors[:, pair] = vectors[:, pair] @ block

        # Exact zeros where the rotation was designed to put them
        work[p_index, q_index] = 0.0
        work[q_index, p_index] = 0.0
        work[p_index, p_index] = work[p_index, p_index].real
        work[q_index, q_index] = work[q_index, q_index].real

    @staticmethod
    def singular_values(matrix: np.ndarray) -> np.ndarray:
        """
        :param matrix: Any complex matrix (rows x cols)
        :return: The cols singular values in descending order, computed as the
                square roots of the eigenvalues of MᴴM
        """
        use_matrix: np.ndarray = np.atleast_2d(np.array(matrix, dtype=complex))
        if use_matrix.size == 0:
            return np.zeros(0)

        normal: np.ndarray = use_matrix.conj().T @ use_matrix
        eigenvalues, _ = HermitianEigen.solve(normal)
        values: np.ndarray = np.sqrt(np.clip(eigenvalues, 0.0, None))
        return values[::-1]

    @staticmethod
    def pseudo_inverse(matrix: np.ndarray, rank_tol: float = 1e-12) -> np.ndarray:
        """
        :param matrix: Any complex matrix X
        :param rank_tol: Eigenvalues of XᴴX below rank_tol times the largest are treated as zero
        :return: The Moore-Penrose pseudo-inverse (XᴴX)⁺Xᴴ
        """
        use_matrix: np.ndarray = np.atleast_2d(np.array(matrix, dtype=complex))
        rows, cols = use_matrix.shape
        if use_matrix.size == 0:
            return np.zeros((cols, rows), dtype=complex)

        eigenvalues, vectors = HermitianEigen.solve(use_matrix.conj().T @ use_matrix)
        largest: float = max(float(np.max(eigenvalues)), 0.0)
        inverted: np.ndarray = np.zeros_like(eigenvalues)
        keep: np.ndarray = eigenvalues > rank_tol * largest
        if largest > 0.0:
            inverted[keep] = 1.0 / eigenvalues[keep]
        return (vectors * inverted[None, :]) @ vectors.conj().T @ use_matrix.conj().T
