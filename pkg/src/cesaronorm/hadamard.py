"""The triangular multiplier operator T_c as a matrix-free linear map, and
its l2 operator norm by deterministic power iteration on T^T T."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ConvergenceError, DimensionError, DomainError, ResourceError

_DENSE_GUARD = 5000


@dataclass(frozen=True)
class MultiplierOperator:
    """Upper-triangular operator with diagonal c_i and entries c_j - c_{j-1}
    above it.  ``c`` holds c_1..c_N (1-based in the math, 0-based here);
    ``d`` holds the consecutive differences with d[0] = 0."""

    c: np.ndarray = field(repr=False)
    d: np.ndarray = field(repr=False)

    @property
    def dimension(self):
        return len(self.c)


@dataclass(frozen=True)
class NormResult:
    norm: float
    norm_sq: float
    iterations: int
    residual: float
    witness: np.ndarray = field(repr=False)


def from_kernel(kernel):
    """Operator for the Cesaro mean: coefficients c_1..c_n with the trailing
    zero c_{n+1} appended, dimension N = n + 1."""
    c = np.append(kernel.coeffs[1:], 0.0)
    d = np.empty_like(c)
    d[0] = 0.0
    np.subtract(c[1:], c[:-1], out=d[1:])
    return MultiplierOperator(c=c, d=d)


def _conform(op, x):
    x = np.asarray(x)
    if len(x) != op.dimension:
        raise DimensionError(
            f"vector length {len(x)} does not match dimension {op.dimension}"
        )
    if np.iscomplexobj(x):
        return np.ascontiguousarray(x, dtype=np.complex128)
    return np.ascontiguousarray(x, dtype=np.float64)


def matvec(op, x):
    """y = T_c x in O(N) via a reverse suffix-sum pass."""
    x = _conform(op, x)
    out = np.empty_like(x)
    kernels.matvec(op.c, op.d, x, out)
    return out


def matvec_adjoint(op, x):
    """y = T_c^T x in O(N) via a forward prefix-sum pass."""
    x = _conform(op, x)
    out = np.empty_like(x)
    kernels.matvec_adjoint(op.c, op.d, x, out)
    return out


def dense(op):
    """Explicit matrix, for small-scale oracles only."""
    n = op.dimension
    if n > _DENSE_GUARD:
        raise ResourceError(f"dense materialization capped at {_DENSE_GUARD}, got {n}")
    mat = np.zeros((n, n))
    for i in range(n):
        mat[i, i] = op.c[i]
        mat[i, i + 1:] = op.d[i + 1:]
    return mat


def _power_run(op, x0, tol, max_iter):
    """Power iteration on x -> T^T (T x) from a fixed start.

    Returns (rayleigh, witness, iterations, residual); the Rayleigh value is
    ||T witness||^2 for the returned unit witness, hence a lower bound on
    the squared norm at every iterate.
    """
    x = x0 / np.linalg.norm(x0)
    buf = np.empty_like(x)
    rho = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        kernels.matvec(op.c, op.d, x, buf)
        y = np.empty_like(x)
        kernels.matvec_adjoint(op.c, op.d, buf, y)
        rho_new = float(x @ y)
        norm_y = float(np.linalg.norm(y))
        if norm_y == 0.0:
            return 0.0, x, it, 0.0
        residual = abs(rho_new - rho) / max(abs(rho_new), 1e-300)
        witness = x
        rho = rho_new
        x = y / norm_y
        if residual < tol:
            return rho, witness, it, residual
    return rho, witness, max_iter, residual


def operator_norm(op, tol=1e-10, max_iter=20000):
    """Largest singular value of T_c.

    Deterministic starts: the all-ones vector, an alternating-sign restart,
    and the first coordinate vector (whose Rayleigh sequence starts at the
    c_1 eigenvalue bound and increases, so the reported value always
    dominates max_k |c_k|).  The best run wins.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    n = op.dimension
    if not np.any(op.c):
        return NormResult(0.0, 0.0, 0, 0.0, np.ones(n) / math.sqrt(n))
    starts = [np.ones(n)]
    alternating = np.ones(n)
    alternating[1::2] = -1.0
    starts.append(alternating)
    e1 = np.zeros(n)
    e1[0] = 1.0
    starts.append(e1)
    best = None
    for x0 in starts:
        run = _power_run(op, x0, tol, max_iter)
        if best is None or run[0] > best[0]:
            best = run
    rho, witness, iterations, residual = best
    result = NormResult(
        norm=math.sqrt(rho),
        norm_sq=rho,
        iterations=iterations,
        residual=residual,
        witness=witness,
    )
    if residual > tol:
        raise ConvergenceError(
            f"power iteration stagnation {residual:.3e} did not reach "
            f"tol={tol} within {max_iter} iterations",
            result=result,
        )
    return result


def eigen_check(op, k):
    """Residual ||T v_k - c_k v_k||_inf for the triangular eigenvector
    v_k = e_1 + ... + e_k."""
    if not 1 <= k <= op.dimension:
        raise DomainError(f"k must lie in 1..{op.dimension}, got {k}")
    v = np.zeros(op.dimension)
    v[:k] = 1.0
    return float(np.max(np.abs(matvec(op, v) - op.c[k - 1] * v)))


def coeff_lower_bound(op):
    """max_k |c_k|, a certified lower bound for the operator norm."""
    return float(np.max(np.abs(op.c)))
