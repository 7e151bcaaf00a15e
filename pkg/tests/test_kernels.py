"""Equivalence of the compiled extension and the NumPy fallback."""

import numpy as np
import pytest

from cesaronorm import _kernels_py, cesaro, hadamard

try:
    from cesaronorm import _kernels
except ImportError:
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def random_case(rng, n, alpha, complex_input):
    op = hadamard.from_kernel(cesaro.coefficients(n, alpha))
    x = rng.standard_normal(op.dimension)
    if complex_input:
        x = x + 1j * rng.standard_normal(op.dimension)
    return op, np.ascontiguousarray(x)


@needs_ext
@pytest.mark.parametrize("complex_input", [False, True])
def test_matvec_backends_agree(complex_input):
    rng = np.random.default_rng(1)
    for n, alpha in [(1, 0.5), (7, 0.0), (64, 0.3), (513, 0.9), (2048, 1.0)]:
        op, x = random_case(rng, n, alpha, complex_input)
        out_c = np.empty_like(x)
        out_py = np.empty_like(x)
        _kernels.matvec(op.c, op.d, x, out_c)
        _kernels_py.matvec(op.c, op.d, x, out_py)
        np.testing.assert_allclose(out_c, out_py, rtol=1e-13, atol=1e-13)


@needs_ext
@pytest.mark.parametrize("complex_input", [False, True])
def test_adjoint_backends_agree(complex_input):
    rng = np.random.default_rng(2)
    for n, alpha in [(1, 0.5), (7, 0.0), (64, 0.3), (513, 0.9), (2048, 1.0)]:
        op, x = random_case(rng, n, alpha, complex_input)
        out_c = np.empty_like(x)
        out_py = np.empty_like(x)
        _kernels.matvec_adjoint(op.c, op.d, x, out_c)
        _kernels_py.matvec_adjoint(op.c, op.d, x, out_py)
        np.testing.assert_allclose(out_c, out_py, rtol=1e-13, atol=1e-13)


def test_fallback_env_override(monkeypatch):
    import importlib

    import cesaronorm.kernels as kernels_mod

    monkeypatch.setenv("CESARONORM_FORCE_PY", "1")
    reloaded = importlib.reload(kernels_mod)
    assert reloaded.BACKEND == "python"
    monkeypatch.delenv("CESARONORM_FORCE_PY")
    importlib.reload(kernels_mod)
