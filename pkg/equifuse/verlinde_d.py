"""
The Verlinde algebra V(D) of the semisimple part D of rep U_q(sl2),
q = exp(i*pi/kappa), with simples V_0..V_delta, delta = kappa - 2.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .arith import DEFAULT_TOLERANCE, Tolerance, quantum_integer, theta
from .exceptions import InvalidParameter, ResidualError
from .utils import frozen, max_abs, nearest_integer

log = logging.getLogger(__name__)


def dual(i: int) -> int:
    # every simple of rep U_q(sl2) is self-dual
    return i


def n_closed_form(i: int, j: int, k: int, delta: int) -> int:
    if abs(i - j) <= k <= i + j and k <= 2 * delta - (i + j) and (i + j + k) % 2 == 0:
        return 1
    return 0


@dataclass(frozen=True, eq=False)
class ModularDataD:
    kappa: int
    n_tensor: np.ndarray
    s: np.ndarray
    twists: np.ndarray
    dims: np.ndarray
    p_plus: complex
    p_minus: complex
    big_d: float

    @property
    def delta(self) -> int:
        return self.kappa - 2

    @property
    def rank(self) -> int:
        return self.kappa - 1

    @property
    def t(self) -> np.ndarray:
        return np.diag(self.twists)

    @classmethod
    def build(cls, kappa: int) -> ModularDataD:
        if int(kappa) != kappa or kappa < 3:
            raise InvalidParameter("kappa >= 3", kappa)
        delta = kappa - 2
        rank = delta + 1
        labels = range(rank)

        n_tensor = np.zeros((rank, rank, rank), dtype=np.int64)
        for i, j, k in itertools.product(labels, repeat=3):
            n_tensor[i, j, k] = n_closed_form(i, j, k, delta)

        idx = np.arange(1, rank + 1)
        s = np.sqrt(2 / kappa) * np.sin(np.outer(idx, idx) * np.pi / kappa)
        twists = np.array([theta(i, kappa) for i in labels])
        dims = np.array([quantum_integer(i + 1, kappa) for i in labels])

        p_plus = complex(np.sum(twists * dims**2))
        p_minus = complex(np.sum(twists.conj() * dims**2))
        big_d = float(np.sqrt(abs(p_plus * p_minus)))
        log.debug("built V(D) for kappa=%d: D=%.12g", kappa, big_d)

        return cls(
            kappa=kappa,
            n_tensor=frozen(n_tensor),
            s=frozen(s),
            twists=frozen(twists),
            dims=frozen(dims),
            p_plus=p_plus,
            p_minus=p_minus,
            big_d=big_d,
        )

    @classmethod
    def for_m(cls, m: int) -> ModularDataD:
        """The level delta = 4m of the type D quantum subgroup"""
        return cls.build(4 * m + 2)

    def check_index(self, *indices: int):
        for i in indices:
            if int(i) != i or not 0 <= i <= self.delta:
                raise InvalidParameter("an index in 0..{0}".format(self.delta), i)


def fusion_coeff_n(i: int, j: int, k: int, data: ModularDataD) -> int:
    data.check_index(i, j, k)
    return int(data.n_tensor[i, j, k])


def s_matrix_d(i: int, j: int, data: ModularDataD) -> float:
    data.check_index(i, j)
    return float(data.s[i, j])


def qdim(i: int, data: ModularDataD) -> float:
    data.check_index(i)
    return float(data.dims[i])


def normalization(data: ModularDataD) -> tuple[complex, complex, float]:
    return data.p_plus, data.p_minus, data.big_d


def verlinde_value(i: int, j: int, k: int, data: ModularDataD) -> float:
    """sum_p s_ip s_jp s_{k*}p / s_0p, without integer recovery"""
    data.check_index(i, j, k)
    s = data.s
    return float(np.sum(s[i] * s[j] * s[dual(k)].conj() / s[0]).real)


def verlinde_coeff(
    i: int, j: int, k: int, data: ModularDataD, tol: Tolerance = DEFAULT_TOLERANCE
) -> float:
    value = verlinde_value(i, j, k, data)
    nearest_integer(value, tol.eps)
    return value


def s_from_twists(i: int, j: int, data: ModularDataD) -> complex:
    """theta_i^-1 theta_j^-1 sum_k N^k_{i*j} theta_k d_k, divided by D"""
    data.check_index(i, j)
    tw = data.twists
    total = np.sum(data.n_tensor[dual(i), j] * tw * data.dims)
    return complex(total / (tw[i] * tw[j] * data.big_d))


def sl2_relation_residual(
    s: np.ndarray, twists: np.ndarray, p_plus: complex, big_d: float
) -> float:
    """max entry of (st)^3 - (p+/D) s^2"""
    st = s @ np.diag(twists)
    return max_abs(st @ st @ st - (p_plus / big_d) * (s @ s))


def verlinde_residual(data: ModularDataD) -> float:
    """max over all triples of |verlinde value - N^k_ij|"""
    s = data.s
    inv_s0 = 1 / s[0]
    # tensor of sum_p s_ip s_jp s_kp / s_0p for every (i, j, k)
    values = np.einsum("ip,jp,kp,p->ijk", s, s, s.conj(), inv_s0).real
    return max_abs(values - data.n_tensor)


def n_associativity_residual(data: ModularDataD) -> float:
    """max over i, j, k, l of |sum_r N^r_ij N^l_rk - sum_r N^r_jk N^l_ir|"""
    N = data.n_tensor
    left = np.einsum("ijr,rkl->ijkl", N, N)
    right = np.einsum("jkr,irl->ijkl", N, N)
    return float(np.max(np.abs(left - right)))


def dimension_s_residual(data: ModularDataD) -> float:
    """d_i against s_0i / s_00 and against D s_0i"""
    s_0 = data.s[0]
    return max(
        max_abs(data.dims - s_0 / s_0[0]),
        max_abs(data.big_d * s_0 - data.dims),
    )


def recover_integer(value: float, tol: Tolerance = DEFAULT_TOLERANCE) -> int | None:
    try:
        return nearest_integer(value, tol.eps)
    except ResidualError:
        return None
