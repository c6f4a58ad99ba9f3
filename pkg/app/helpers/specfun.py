"""
Special functions needed by the engines: associated Laguerre polynomials and
matrix elements of the displacement operator D(alpha) = exp(alpha (a^dag - a))
between Fock states, for real alpha.
"""

import math

import numpy as np

from app.exceptions.specfun import NegativeDegreeError, NegativeIndexError


def laguerre(n: int, k, x):
    """
    Associated Laguerre polynomial L_n^k(x) by the upward three-term recurrence

        (j+1) L_{j+1}^k = (2j + k + 1 - x) L_j^k - (j + k) L_{j-1}^k

    `k` and `x` broadcast as numpy arrays; a scalar pair returns a float.

    Raises:
        NegativeDegreeError: If n < 0 or any k < 0.
    """
    if n < 0:
        raise NegativeDegreeError(f"Laguerre degree must be >= 0, got {n}")
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0):
        raise NegativeDegreeError(f"Laguerre order must be >= 0, got {k}")
    x_arr = np.asarray(x, dtype=float)
    k_arr, x_arr = np.broadcast_arrays(k_arr, x_arr)

    previous = np.ones_like(x_arr)
    if n == 0:
        return _unwrap(previous)
    current = 1.0 + k_arr - x_arr
    for j in range(1, n):
        previous, current = current, (
            (2 * j + k_arr + 1 - x_arr) * current - (j + k_arr) * previous
        ) / (j + 1)
    return _unwrap(current)


def displaced_fock_overlap(m: int, n: int, alpha: float) -> float:
    """
    <m| exp(alpha (a^dag - a)) |n> for real alpha.

    For m >= n this is sqrt(n!/m!) alpha^(m-n) exp(-alpha^2/2) L_n^(m-n)(alpha^2);
    the m < n case follows from <m|D|n> = (-1)^(m+n) <n|D|m>.

    Raises:
        NegativeIndexError: If m or n is negative.
    """
    if m < 0 or n < 0:
        raise NegativeIndexError(f"Fock indices must be >= 0, got ({m}, {n})")
    if m < n:
        return (-1) ** (m + n) * displaced_fock_overlap(n, m, alpha)
    ratio = _falling_ratio(n, m, alpha)
    return float(
        ratio * math.exp(-0.5 * alpha * alpha) * laguerre(n, m - n, alpha * alpha)
    )


def displaced_fock_column(n: int, alpha: float, size: int) -> np.ndarray:
    """
    Column D(alpha)|n> expanded on Fock states 0..size-1.
    """
    if n < 0 or size < 1:
        raise NegativeIndexError(f"Invalid column request n={n}, size={size}")
    column = np.zeros(size)
    below = min(n, size)
    for m in range(below):
        column[m] = displaced_fock_overlap(m, n, alpha)
    if n < size:
        ks = np.arange(size - n)
        steps = np.ones(size - n)
        steps[1:] = alpha / np.sqrt(np.arange(n + 1, size))
        ratios = np.cumprod(steps)
        column[n:] = (
            ratios
            * math.exp(-0.5 * alpha * alpha)
            * laguerre(n, ks, alpha * alpha)
        )
    return column


def _falling_ratio(n: int, m: int, alpha: float) -> float:
    """sqrt(n!/m!) alpha^(m-n) for m >= n, as a running product."""
    ratio = 1.0
    for j in range(n + 1, m + 1):
        ratio *= alpha / math.sqrt(j)
    return ratio


def _unwrap(value: np.ndarray):
    return float(value) if value.ndim == 0 else value
