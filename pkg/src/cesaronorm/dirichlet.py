"""Local Dirichlet seminorms of polynomials at boundary points, Hadamard
products, Rayleigh quotients, and extremal candidates recovered from
power-iteration witnesses.

The seminorm at a boundary point reduces to the squared l2 norm of the
tail-sum vector t_j = sum_{k>j} a_k; that same transform conjugates the
Cesaro mean into the triangular multiplier operator.
"""

import numpy as np

from . import cesaro, hadamard
from .errors import DomainError


class Polynomial:
    """Finite complex Taylor coefficient sequence a_0..a_N."""

    def __init__(self, coeffs):
        self.coeffs = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))

    def __len__(self):
        return len(self.coeffs)

    @property
    def degree(self):
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if len(nz) else None


def tail_transform(f):
    """Tail sums t_j = sum_{k>j} a_k for j = 0..N-1, one reverse pass."""
    a = f.coeffs
    if len(a) <= 1:
        return np.zeros(0, dtype=np.complex128)
    return np.cumsum(a[:0:-1])[::-1]


def from_tail(t, a0=0.0):
    """Inverse of tail_transform: a_k = t_{k-1} - t_k (t_N = 0); a_0 is free
    because the seminorm annihilates constants."""
    t = np.asarray(t, dtype=np.complex128)
    a = np.empty(len(t) + 1, dtype=np.complex128)
    a[0] = a0
    a[1:-1] = t[:-1] - t[1:]
    if len(t):
        a[-1] = t[-1]
    return Polynomial(a)


def local_dirichlet_seminorm(f, zeta=1.0):
    """Local Dirichlet seminorm at a boundary point zeta (|zeta| = 1),
    reduced to zeta = 1 by the coefficient rotation a_k -> a_k zeta^k."""
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise DomainError(f"zeta must be unimodular, got |zeta|={abs(zeta)}")
    if zeta != 1.0:
        rotated = f.coeffs * zeta ** np.arange(len(f.coeffs))
        f = Polynomial(rotated)
    t = tail_transform(f)
    return float(np.real(np.vdot(t, t)))


def hadamard_product(f, g):
    """Coefficientwise product, truncated to the shorter sequence."""
    m = min(len(f), len(g))
    return Polynomial(f.coeffs[:m] * g.coeffs[:m])


def rayleigh_quotient(kernel, f):
    """Seminorm amplification D_1(sigma f) / D_1(f); requires non-constant f."""
    denom = local_dirichlet_seminorm(f)
    if denom == 0.0:
        raise DomainError("rayleigh_quotient requires a non-constant polynomial")
    sigma_f = Polynomial(cesaro.apply(kernel, f.coeffs))
    return local_dirichlet_seminorm(sigma_f) / denom


def extremal_candidate(kernel, norm_result):
    """Near-maximizing polynomial whose tail vector is the power-iteration
    witness; its Rayleigh quotient matches the squared norm to solver
    tolerance."""
    witness = norm_result.witness
    if not np.any(witness):
        raise DomainError("norm result carries a zero witness")
    return from_tail(witness)
