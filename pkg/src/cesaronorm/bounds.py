"""Certified brackets for the squared operator norm: the (n+1)S upper bound,
the m * suffix-energy lower bounds, and their closed Gamma-form estimates."""

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError


def diff_energy(kernel):
    """Difference energy S = sum_{k=1}^n |c_{k+1} - c_k|^2 (with c_{n+1} = 0)
    and the suffix sums (S~_1, ..., S~_n), accumulated from k = n downward."""
    if kernel.n < 1:
        raise DomainError("diff_energy requires n >= 1")
    c = kernel.coeffs
    diffs = np.append(c[1:], 0.0) - c  # c_{k+1} - c_k for k = 0..n
    sq = diffs[1:] ** 2
    suffix = np.cumsum(sq[::-1])[::-1]
    return float(suffix[0]), suffix


def upper_certificate(kernel):
    """(n+1) S, an upper bound for the squared norm."""
    s, _ = diff_energy(kernel)
    return (kernel.n + 1) * s


def lower_certificate(kernel, m):
    """m * S~_m, a lower bound for the squared norm, valid for 1 <= m <= n."""
    _, suffix = diff_energy(kernel)
    if not 1 <= m <= kernel.n:
        raise DomainError(f"m must lie in 1..{kernel.n}, got {m}")
    return m * float(suffix[m - 1])


def best_lower(kernel):
    """Maximum of m * S~_m over all m, with its arg max (ties to smaller m)."""
    _, suffix = diff_energy(kernel)
    values = np.arange(1, kernel.n + 1) * suffix
    m_star = int(np.argmax(values)) + 1
    return float(values[m_star - 1]), m_star


def _check_closed_form_args(n, alpha):
    if n <= 1:
        raise DomainError(f"closed forms require n > 1, got n={n}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")


def closed_form_upper(n, alpha):
    """Closed Gamma-form upper bound for S (branching exactly at alpha = 1/2)."""
    _check_closed_form_args(n, alpha)
    if alpha == 0.5:
        return (
            (math.pi / 4.0)
            * (n + 1.0) / (n + 0.5) ** 2
            * (1.0 + (math.log(n - 1.0) + 1.0) / math.pi)
        )
    inv_gamma_a_sq = math.exp(-2.0 * specfun.log_gamma(alpha))
    return (
        math.exp(2.0 * specfun.log_gamma(alpha + 1.0))
        * (n + 1.0) ** (2.0 - 2.0 * alpha) / (n + alpha) ** 2
        * (
            1.0
            + inv_gamma_a_sq
            * ((n - 1.0) ** (2.0 * alpha - 1.0) + 2.0 * alpha - 2.0)
            / (2.0 * alpha - 1.0)
        )
    )


def closed_form_lower(n, alpha, m):
    """Closed Gamma-form lower bound for S~_m, valid for 1 <= m < n."""
    _check_closed_form_args(n, alpha)
    if not 1 <= m < n:
        raise DomainError(f"m must lie in 1..n-1, got m={m}, n={n}")
    if alpha == 0.5:
        return (
            (math.pi / 4.0)
            * n / (n + 0.5) ** 2
            * (1.0 + (math.log(n - m + 2.0) - math.log(2.0)) / math.pi)
        )
    inv_gamma_a_sq = math.exp(-2.0 * specfun.log_gamma(alpha))
    return (
        math.exp(2.0 * specfun.log_gamma(alpha + 1.0))
        * float(n) ** (2.0 - 2.0 * alpha) / (n + alpha) ** 2
        * (
            1.0
            + inv_gamma_a_sq
            * ((n - m + 2.0) ** (2.0 * alpha - 1.0) - 2.0 ** (2.0 * alpha - 1.0))
            / (2.0 * alpha - 1.0)
        )
    )


def proof_m_choice(n, regime, alpha=None, gamma=0.5):
    """Cutoff index used in the asymptotic arguments:

        regime "gamma" / "half":  m = floor((n-1) / 2^gamma), 0 < gamma < 1,
        regime "above":           m = floor((n-1) / (2 alpha)),

    clamped to [1, n-1] so small n stays usable.
    """
    if n <= 1:
        raise DomainError(f"proof_m_choice requires n > 1, got {n}")
    if regime in ("gamma", "half"):
        if not 0.0 < gamma < 1.0:
            raise DomainError(f"gamma must lie in (0, 1), got {gamma}")
        m = math.floor((n - 1) / 2.0**gamma)
    elif regime == "above":
        if alpha is None:
            raise DomainError("regime 'above' requires alpha")
        m = math.floor((n - 1) / (2.0 * alpha))
    else:
        raise DomainError(f"unknown regime {regime!r}")
    return max(1, min(n - 1, m))


@dataclass(frozen=True)
class NormBracket:
    """All certificates for one (n, alpha) instance.  ``lower``/``upper``
    bracket the squared norm; the closed_* fields are the Gamma-form
    estimates (NaN where the lemmas do not apply: n = 1 or alpha in {0,1})."""

    n: int
    alpha: float
    lower: float
    lower_m: int
    upper: float
    closed_upper: float
    closed_lower: float
    proof_m: int


def norm_bracket(kernel):
    """Assemble the full certificate bracket for a kernel."""
    n, alpha = kernel.n, kernel.alpha
    s, suffix = diff_energy(kernel)
    lower, lower_m = best_lower(kernel)
    upper = (n + 1) * s
    closed_upper = math.nan
    closed_lower = math.nan
    proof_m = 0
    if n > 1 and 0.0 < alpha < 1.0:
        closed_upper = (n + 1) * closed_form_upper(n, alpha)
        regime = "above" if alpha > 0.5 else ("half" if alpha == 0.5 else "gamma")
        proof_m = proof_m_choice(n, regime, alpha=alpha)
        closed_lower = proof_m * closed_form_lower(n, alpha, proof_m)
    return NormBracket(
        n=n,
        alpha=alpha,
        lower=lower,
        lower_m=lower_m,
        upper=upper,
        closed_upper=closed_upper,
        closed_lower=closed_lower,
        proof_m=proof_m,
    )
