"""Operator norms of generalized Cesaro means on local Dirichlet spaces.

The Cesaro mean of degree n and order alpha acts on Taylor coefficients as a
Hadamard multiplier; its optimal multiplier constant over superharmonic
weights equals the l2 norm of a triangular matrix built from the weight
sequence.  This package computes that norm exactly at finite n, evaluates
certified upper/lower bound certificates, and verifies the three asymptotic
growth regimes (alpha below, at, and above 1/2).
"""

from .bounds import NormBracket, norm_bracket
from .cesaro import CesaroKernel, coefficients, coefficients_gamma
from .dirichlet import Polynomial, local_dirichlet_seminorm, rayleigh_quotient
from .hadamard import MultiplierOperator, NormResult, from_kernel, operator_norm
from .kernels import BACKEND
from .specfun import c_alpha_gamma, c_alpha_quadrature, c_alpha_series
from .sweep import SweepConfig, run_sweep, trend_check

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CesaroKernel",
    "MultiplierOperator",
    "NormBracket",
    "NormResult",
    "Polynomial",
    "SweepConfig",
    "c_alpha_gamma",
    "c_alpha_quadrature",
    "c_alpha_series",
    "coefficients",
    "coefficients_gamma",
    "from_kernel",
    "local_dirichlet_seminorm",
    "norm_bracket",
    "operator_norm",
    "rayleigh_quotient",
    "run_sweep",
    "trend_check",
]
