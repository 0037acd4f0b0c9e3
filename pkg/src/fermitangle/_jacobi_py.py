"""Pure-Python (numpy) cyclic Jacobi kernel.

Used when the compiled ``_jacobi`` extension is unavailable or when
``FERMITANGLE_PURE=1`` is set. Must stay numerically equivalent to
``_jacobi.pyx``: same pivot order, same rotation formulas.
"""
import math

import numpy as np


def _off_norm2(a):
    # summed directly; total minus diagonal cancels below the tolerance
    off = a - np.diag(np.diag(a))
    return float(np.sum(off.real**2 + off.imag**2))


def diagonalize(a, tol, max_sweeps):
    """Diagonalize Hermitian ``a`` by cyclic-by-row unitary Jacobi rotations.

    Returns ``(diagonal, converged, sweeps)``. ``tol`` is an absolute bound
    on the off-diagonal Frobenius norm.
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    sweeps = 0
    while True:
        off2 = _off_norm2(a)
        if off2 <= tol * tol or sweeps >= max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = float(abs(apq))
                if mag == 0.0:
                    continue
                app = float(a[p, p].real)
                aqq = float(a[q, q].real)
                diff = aqq - app
                if abs(diff) > 1e150 * mag:
                    # theta would overflow; t ~ 1/(2 theta)
                    t = mag / diff
                else:
                    theta = diff / (2.0 * mag)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # componentwise: complex division overflows for subnormal apq
                e = complex(apq.real / mag, apq.imag / mag)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * e.conjugate() * col_q
                a[:, q] = s * e * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * e * row_q
                a[q, :] = s * e.conjugate() * row_p + c * row_q
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
    return np.diag(a).real.copy(), off2 <= tol * tol, sweeps
