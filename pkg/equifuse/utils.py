"""Util functions that are needed but messy."""

from __future__ import annotations

import numpy as np

from .exceptions import ResidualError

SIGNIFICANT_DIGITS = 12


def round_floats(d):
    """Walk a JSON-bound structure and render every float with 12 significant digits"""
    if isinstance(d, dict):
        return {key: round_floats(value) for key, value in d.items()}
    if isinstance(d, (list, tuple)):
        return [round_floats(item) for item in d]
    if isinstance(d, (complex, np.complexfloating)):
        return [round_floats(float(d.real)), round_floats(float(d.imag))]
    if isinstance(d, (bool, np.bool_)):
        return bool(d)
    if isinstance(d, (int, np.integer)):
        return int(d)
    if isinstance(d, (float, np.floating)):
        value = float("{0:.{1}g}".format(float(d), SIGNIFICANT_DIGITS))
        # -0.0 would make two otherwise identical runs differ
        return 0.0 if value == 0 else value
    return d


def prune_zero(terms: dict, eps: float) -> dict:
    return {key: value for key, value in terms.items() if abs(value) >= eps}


def nearest_integer(value: complex | float, eps: float) -> int:
    """Recover the integer n with |value - n| < eps, or raise ResidualError"""
    value = complex(value)
    n = int(round(value.real))
    residual = abs(value - n)
    if residual >= eps:
        raise ResidualError(value, residual, eps)
    return n


def is_close(a: complex | float, b: complex | float, eps: float) -> bool:
    return abs(complex(a) - complex(b)) < eps


def max_abs(matrix) -> float:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0.0
    return float(np.max(np.abs(matrix)))


def unitarity_residual(s: np.ndarray) -> float:
    s = np.asarray(s)
    return max_abs(s @ s.conj().T - np.eye(s.shape[0]))


def symmetry_residual(s: np.ndarray) -> float:
    s = np.asarray(s)
    return max_abs(s - s.T)


def frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array)
    array.setflags(write=False)
    return array
