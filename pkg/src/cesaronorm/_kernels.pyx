# cython: boundscheck=False, wraparound=False, cdivision=True
"""Hot loops for the triangular multiplier operator: single-pass matvec via
suffix sums and adjoint matvec via prefix sums."""

cimport cython

ctypedef fused numeric:
    double
    double complex


cpdef void matvec(const double[::1] c, const double[::1] d,
                  const numeric[::1] x, numeric[::1] out) noexcept:
    """out_i = c_i x_i + sum_{j > i} d_j x_j, with d_j = c_j - c_{j-1} (d_0 unused)."""
    cdef Py_ssize_t i, n = c.shape[0]
    cdef numeric s = 0
    for i in range(n - 1, -1, -1):
        out[i] = c[i] * x[i] + s
        s = s + d[i] * x[i]


cpdef void matvec_adjoint(const double[::1] c, const double[::1] d,
                          const numeric[::1] x, numeric[::1] out) noexcept:
    """out_j = c_j x_j + d_j sum_{i < j} x_i (transpose action; d_0 = 0)."""
    cdef Py_ssize_t j, n = c.shape[0]
    cdef numeric p = 0
    for j in range(n):
        out[j] = c[j] * x[j] + d[j] * p
        p = p + x[j]
