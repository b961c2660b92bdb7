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
from __future__ import annotations

from math import factorial
from typing import Dict
from typing import Iterable
from typing import List
from typing import Tuple

import numpy as np

from extlab.exppoly.exp_poly_term import ExpPolyTerm


class ExpPoly:
    """
    Exact finite sum f(x) = Σ c_k x^{m_k} e^{-λ_k x} on the positive half-line,
    with Re λ_k > 0 for every term.

    Instances are immutable and always held in canonical form: terms sharing
    a power and a rate (to RATE_TOL) are merged, negligible coefficients are
    dropped and the rest is ordered by (Re rate, Im rate, power).
    Every such function lies in H² of the half-line, so in the adjoint domain
    of the minimal Schrödinger operator -d²/dx² + 1.
    """

    # Rates closer than RATE_TOL * (1 + |λ|) are the same rate
    RATE_TOL: float = 1e-8

    # Coefficients below COEFF_TOL relative to the largest input coefficient are zero
    COEFF_TOL: float = 1e-12

    # Absolute tolerance on boundary traces
    TRACE_TOL: float = 1e-9

    def __init__(self, terms: Iterable[ExpPolyTerm] = None):
        """
        Constructor

        :param terms: The terms of the function, in any order and possibly
                    with duplicates.  None or empty gives the zero function.
        """
        use_terms: List[ExpPolyTerm] = []
        if terms is not None:
            use_terms = list(terms)
        self.terms: Tuple[ExpPolyTerm, ...] = tuple(self.canonicalize(use_terms))

    @staticmethod
    def zero() -> ExpPoly:
        """
        :return: The zero function
        """
        return ExpPoly()

    @staticmethod
    def monomial(coeff: complex = 1.0, power: int = 0, rate: complex = 1.0) -> ExpPoly:
        """
        :param coeff: The coefficient c
        :param power: The power m
        :param rate: The rate λ
        :return: The single-term function c x^m e^{-λx}
        """
        return ExpPoly([ExpPolyTerm(complex(coeff), power, complex(rate))])

    @staticmethod
    def same_rate(rate_a: complex, rate_b: complex) -> bool:
        """
        :return: True if the two rates are identified under RATE_TOL
        """
        return abs(rate_a - rate_b) <= ExpPoly.RATE_TOL * (1.0 + abs(rate_a))

    @staticmethod
    def canonicalize(terms: List[ExpPolyTerm]) -> List[ExpPolyTerm]:
        """
        :param terms: Raw terms
        :return: The canonical list of terms
        """
        if len(terms) == 0:
            return []

        largest: float = max(abs(term.coeff) for term in terms)
        ordered: List[ExpPolyTerm] = sorted(terms, key=ExpPolyTerm.sort_key)

        # Each bucket is [power, rate, coefficient sum]
        buckets: List[list] = []
        for term in ordered:
            for bucket in buckets:
                if bucket[0] == term.power and ExpPoly.same_rate(bucket[1], term.rate):
                    bucket[2] += term.coeff
                    break
            else:
                buckets.append([term.power, complex(term.rate), complex(term.coeff)])

        threshold: float = ExpPoly.COEFF_TOL * largest
        kept: List[ExpPolyTerm] = [ExpPolyTerm(bucket[2], bucket[0], bucket[1])
                                   for bucket in buckets if abs(bucket[2]) > threshold]
        return sorted(kept, key=ExpPolyTerm.sort_key)

    def get_terms(self) -> Tuple[ExpPolyTerm, ...]:
        """
        :return: The canonical terms
        """
        return self.terms

    def is_zero(self) -> bool:
        """
        :return: True if this is the zero function
        """
        return len(self.terms) == 0

    def max_coeff(self) -> float:
        """
        :return: The largest coefficient magnitude, 0 for the zero function
        """
        if self.is_zero():
            return 0.0
        return max(abs(term.coeff) for term in self.terms)

    def rates(self) -> List[complex]:
        """
        :return: The distinct rates in canonical order
        """
        rates: List[complex] = []
        for term in self.terms:
            if not rates or not self.same_rate(rates[-1], term.rate):
                rates.append(term.rate)
        return rates

    def by_rate(self) -> Dict[complex, Dict[int, complex]]:
        """
        :return: A dictionary of rate -> {power: coefficient}, one entry per distinct rate
        """
        groups: Dict[complex, Dict[int, complex]] = {}
        for rate in self.rates():
            groups[rate] = {}
        for term in self.terms:
            for rate, powers in groups.items():
                if self.same_rate(rate, term.rate):
                    powers[term.power] = powers.get(term.power, 0.0) + term.coeff
                    break
        return groups

    def add(self, other: ExpPoly) -> ExpPoly:
        """
        :param other: Another ExpPoly
        :return: The pointwise sum
        """
        return ExpPoly(self.terms + other.terms)

    def scale(self, scalar: complex) -> ExpPoly:
        """
        :param scalar: A complex scalar
        :return: The scalar multiple
        """
        scalar = complex(scalar)
        if scalar == 0.0:
            return ExpPoly()
        return ExpPoly(ExpPolyTerm(scalar * term.coeff, term.power, term.rate) for term in self.terms)

    def conjugate(self) -> ExpPoly:
        """
        :return: The pointwise complex conjugate; rates go to their conjugates
        """
        return ExpPoly(ExpPolyTerm(np.conj(term.coeff), term.power, np.conj(term.rate))
                       for term in self.terms)

    def differentiate(self) -> ExpPoly:
        """
        :return: The exact derivative, using d/dx x^m e^{-λx} = m x^{m-1} e^{-λx} - λ x^m e^{-λx}
        """
        new_terms: List[ExpPolyTerm] = []
        for term in self.terms:
            if term.power > 0:
                new_terms.append(ExpPolyTerm(term.power * term.coeff, term.power - 1, term.rate))
            new_terms.append(ExpPolyTerm(-term.rate * term.coeff, term.power, term.rate))
        return ExpPoly(new_terms)

    def boundary_values(self) -> Tuple[complex, complex]:
        """
        :return: The traces (f(0), f'(0))
        """
        value: complex = 0j
        derivative: complex = 0j
        for term in self.terms:
            if term.power == 0:
                value += term.coeff
                derivative -= term.rate * term.coeff
            elif term.power == 1:
                derivative += term.coeff
        return value, derivative

    def inner_product(self, other: ExpPoly) -> complex:
        """
        The L² inner product, anti-linear in self and linear in other, from

            ∫ x^{m+n} e^{-(conj λ + μ)x} dx = (m+n)! / (conj λ + μ)^{m+n+1}

        :param other: Another ExpPoly
        :return: ⟨self, other⟩
        """
        total: complex = 0j
        for left in self.terms:
            left_coeff: complex = np.conj(left.coeff)
            left_rate: complex = np.conj(left.rate)
            for right in other.terms:
                power: int = left.power + right.power
                total += left_coeff * right.coeff * factorial(power) / (left_rate + right.rate) ** (power + 1)
        return complex(total)

    def norm(self) -> float:
        """
        :return: The L² norm, from the exact inner product
        """
        return float(np.sqrt(max(self.inner_product(self).real, 0.0)))

    def apply_shifted(self, z: complex) -> ExpPoly:
        """
        :param z: The spectral shift
        :return: (S* - z)f = -f'' + (1 - z) f, with z = 0 giving the adjoint action itself
        """
        second: ExpPoly = self.differentiate().differentiate()
        return self.scale(1.0 - z).add(second.scale(-1.0))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """
        :param x: Nonnegative sample points
        :return: The complex function values at x
        """
        points: np.ndarray = np.asarray(x, dtype=float)
        values: np.ndarray = np.zeros(points.shape, dtype=complex)
        for term in self.terms:
            values += term.coeff * points ** term.power * np.exp(-term.rate * points)
        return values

    def __add__(self, other: ExpPoly) -> ExpPoly:
        return self.add(other)

    def __sub__(self, other: ExpPoly) -> ExpPoly:
        return self.add(other.scale(-1.0))

    def __neg__(self) -> ExpPoly:
        return self.scale(-1.0)

    def __mul__(self, scalar: complex) -> ExpPoly:
        return self.scale(scalar)

    def __rmul__(self, scalar: complex) -> ExpPoly:
        return self.scale(scalar)

    def __repr__(self) -> str:
        if self.is_zero():
            return "ExpPoly(0)"
        parts: List[str] = [f"({term.coeff:.6g})x^{term.power}e^(-({term.rate:.6g})x)" for term in self.terms]
        return "ExpPoly(" + " + ".join(parts) + ")"
