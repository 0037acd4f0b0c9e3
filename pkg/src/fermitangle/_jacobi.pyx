# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel for small dense Hermitian matrices.

Mirrors ``_jacobi_py.diagonalize`` rotation for rotation. Real and
imaginary parts are held in separate C-contiguous buffers.
"""
import numpy as np

from libc.math cimport sqrt, fabs, hypot


cdef double _off_norm2(double[:, ::1] re, double[:, ::1] im, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += re[i, j] * re[i, j] + im[i, j] * im[i, j]
    return acc


cdef int _sweeps(double[:, ::1] re, double[:, ::1] im, double tol2,
                 int max_sweeps) noexcept nogil:
    cdef Py_ssize_t n = re.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweeps = 0
    cdef double mag, app, aqq, diff, theta, t, c, s, er, ei
    cdef double xr, xi, yr, yi
    while _off_norm2(re, im, n) > tol2 and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                mag = hypot(re[p, q], im[p, q])
                if mag == 0.0:
                    continue
                app = re[p, p]
                aqq = re[q, q]
                diff = aqq - app
                if fabs(diff) > 1e150 * mag:
                    t = mag / diff
                else:
                    theta = diff / (2.0 * mag)
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                er = re[p, q] / mag
                ei = im[p, q] / mag
                # A <- A J
                for k in range(n):
                    xr = re[k, p]; xi = im[k, p]
                    yr = re[k, q]; yi = im[k, q]
                    re[k, p] = c * xr - s * (er * yr + ei * yi)
                    im[k, p] = c * xi - s * (er * yi - ei * yr)
                    re[k, q] = s * (er * xr - ei * xi) + c * yr
                    im[k, q] = s * (er * xi + ei * xr) + c * yi
                # A <- J^H A
                for k in range(n):
                    xr = re[p, k]; xi = im[p, k]
                    yr = re[q, k]; yi = im[q, k]
                    re[p, k] = c * xr - s * (er * yr - ei * yi)
                    im[p, k] = c * xi - s * (er * yi + ei * yr)
                    re[q, k] = s * (er * xr + ei * xi) + c * yr
                    im[q, k] = s * (er * xi - ei * xr) + c * yi
                re[p, p] = app - t * mag
                re[q, q] = aqq + t * mag
                im[p, p] = 0.0
                im[q, q] = 0.0
                re[p, q] = 0.0
                im[p, q] = 0.0
                re[q, p] = 0.0
                im[q, p] = 0.0
        sweeps += 1
    return sweeps


def diagonalize(a, double tol, int max_sweeps):
    """Same contract as ``_jacobi_py.diagonalize``."""
    a = np.asarray(a, dtype=np.complex128)
    cdef double[:, ::1] re = np.ascontiguousarray(a.real, dtype=np.float64).copy()
    cdef double[:, ::1] im = np.ascontiguousarray(a.imag, dtype=np.float64).copy()
    cdef Py_ssize_t n = re.shape[0]
    cdef double tol2 = tol * tol
    cdef int sweeps = _sweeps(re, im, tol2, max_sweeps)
    converged = _off_norm2(re, im, n) <= tol2
    return np.diag(np.asarray(re)).copy(), converged, sweeps
