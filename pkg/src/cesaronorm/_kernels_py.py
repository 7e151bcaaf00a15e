"""NumPy fallback for the operator hot loops; same call signature as the
compiled extension (in-place into ``out``)."""

import numpy as np


def matvec(c, d, x, out):
    t = d * x
    suffix = np.cumsum(t[::-1])[::-1]
    np.multiply(c, x, out=out)
    out[:-1] += suffix[1:]


def matvec_adjoint(c, d, x, out):
    prefix = np.cumsum(x)
    np.multiply(c, x, out=out)
    out[1:] += d[1:] * prefix[:-1]
