"""
Scalar arithmetic at the root of unity q = exp(i*pi/kappa).

All q-powers go through :func:`q_power` with a rational exponent reduced
modulo 2*kappa, so half-integer exponents never touch a complex square root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import InvalidParameter

log = logging.getLogger(__name__)

Scalar = complex

EIGHTH_ROOT = complex((1 + 1j) / np.sqrt(2))


@dataclass(frozen=True)
class Tolerance:
    eps: float = 1e-9

    def __post_init__(self):
        if not self.eps > 0:
            raise InvalidParameter("a positive tolerance", self.eps)


DEFAULT_TOLERANCE = Tolerance()


def _check_kappa(kappa: int):
    if int(kappa) != kappa or kappa < 3:
        raise InvalidParameter("kappa >= 3", kappa)


def q_power(exponent: int | Fraction, kappa: int) -> Scalar:
    """q**exponent for q = exp(i*pi/kappa), exponent an integer or a Fraction"""
    _check_kappa(kappa)
    reduced = Fraction(exponent) % (2 * kappa)
    return complex(np.exp(1j * np.pi * float(reduced) / kappa))


def root_of_unity(kappa: int) -> Scalar:
    return q_power(1, kappa)


def quantum_integer(n: int, kappa: int) -> float:
    """[n] = (q^n - q^-n) / (q - q^-1) = sin(n*pi/kappa) / sin(pi/kappa)"""
    _check_kappa(kappa)
    return float(np.sin(n * np.pi / kappa) / np.sin(np.pi / kappa))


def theta(i: int, kappa: int) -> Scalar:
    """Twist q^{i(i+2)/2} of the i-th simple of rep U_q(sl2)"""
    _check_kappa(kappa)
    if not 0 <= i <= kappa - 2:
        raise InvalidParameter("an index in 0..{0}".format(kappa - 2), i)
    return q_power(Fraction(i * (i + 2), 2), kappa)


def ribbon_squared(i: int, j: int, k: int, kappa: int) -> Scalar:
    """Double braiding on V_k inside V_i (x) V_j: theta_k / (theta_i theta_j)"""
    return theta(k, kappa) / (theta(i, kappa) * theta(j, kappa))


def gauss_sum(a: int, b: int) -> Scalar:
    """S(a, b) = sum_{p=1}^{b} exp(pi*i*a*p^2/b), summed directly"""
    if int(b) != b or b < 1:
        raise InvalidParameter("b >= 1", b)
    p = np.arange(1, b + 1, dtype=np.int64)
    # reduce a*p^2 mod 2b in integers before going to floats
    phases = (a * p * p) % (2 * b)
    return complex(np.exp(1j * np.pi * phases / b).sum())


def gauss_sum_reciprocal(a: int, b: int) -> Scalar:
    """
    S(a, b) obtained from S(b, a) by the reciprocity law

        S(a, b) = sqrt(b/a) * (1+i)/sqrt(2) * conj(S(b, a))   for ab even
    """
    if a < 1 or b < 1:
        raise InvalidParameter("positive a and b", (a, b))
    if (a * b) % 2:
        raise InvalidParameter("a*b even", a * b)
    return complex(np.sqrt(b / a) * EIGHTH_ROOT * np.conj(gauss_sum(b, a)))


def reciprocity_residual(a: int, b: int) -> float:
    return abs(gauss_sum(a, b) - gauss_sum_reciprocal(a, b))
