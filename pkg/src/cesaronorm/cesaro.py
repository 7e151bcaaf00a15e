"""Generalized Cesaro coefficient sequences and their action on Taylor
coefficients."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import DomainError


@dataclass(frozen=True)
class CesaroKernel:
    """Weight sequence c_0..c_n of the degree-n, order-alpha Cesaro mean."""

    n: int
    alpha: float
    coeffs: np.ndarray = field(repr=False)


def _check_args(n, alpha):
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")


def coefficients(n, alpha):
    """Build the kernel by the multiplicative recurrence

        c_0 = 1,   c_{k+1} = c_k (n-k) / (n-k+alpha),

    which is exact at alpha in {0, 1} and free of cancellation.
    """
    _check_args(n, alpha)
    if alpha == 0.0:
        c = np.ones(n + 1)
    elif alpha == 1.0:
        c = (n + 1.0 - np.arange(n + 1.0)) / (n + 1.0)
    else:
        down = n - np.arange(n, dtype=np.float64)  # n, n-1, ..., 1
        c = np.empty(n + 1)
        c[0] = 1.0
        np.cumprod(down / (down + alpha), out=c[1:])
    return CesaroKernel(n=n, alpha=float(alpha), coeffs=c)


def coefficients_gamma(n, alpha):
    """Independent construction of the same kernel from log-Gamma ratios:

        c_k = binom(n-k+alpha, alpha) / binom(n+alpha, alpha).

    Slower than ``coefficients``; serves as a cross-check oracle.
    """
    _check_args(n, alpha)
    if alpha == 0.0:
        return CesaroKernel(n=n, alpha=0.0, coeffs=np.ones(n + 1))
    log_norm = specfun.log_gamma(n + alpha + 1.0) - specfun.log_gamma(n + 1.0)
    c = np.empty(n + 1)
    for k in range(n + 1):
        c[k] = math.exp(
            specfun.log_gamma(n - k + alpha + 1.0)
            - specfun.log_gamma(n - k + 1.0)
            - log_norm
        )
    return CesaroKernel(n=n, alpha=float(alpha), coeffs=c)


def apply(kernel, taylor):
    """Apply the Cesaro mean to a Taylor coefficient sequence.

    Returns the truncated sequence (c_k a_k), k = 0..min(n, deg); indices
    beyond n are annihilated.
    """
    taylor = np.asarray(taylor)
    m = min(kernel.n + 1, len(taylor))
    return kernel.coeffs[:m] * taylor[:m]


def tail_asymptotic_cn(n, alpha):
    """Bracket for c_n^2 from Gautschi's inequality:

        Gamma(a+1)^2 n^(2-2a)/(n+a)^2 < c_n^2 < Gamma(a+1)^2 (n+1)^(2-2a)/(n+a)^2.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    scale = math.exp(2.0 * specfun.log_gamma(alpha + 1.0)) / (n + alpha) ** 2
    return (
        scale * n ** (2.0 - 2.0 * alpha),
        scale * (n + 1.0) ** (2.0 - 2.0 * alpha),
    )
