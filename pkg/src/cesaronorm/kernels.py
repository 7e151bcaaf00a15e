"""Backend selection for the operator hot loops.

The compiled extension is preferred; the NumPy fallback is used when the
extension is unavailable or when CESARONORM_FORCE_PY is set (handy for
benchmarking the two against each other).
"""

import os

if os.environ.get("CESARONORM_FORCE_PY"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

matvec = _impl.matvec
matvec_adjoint = _impl.matvec_adjoint
