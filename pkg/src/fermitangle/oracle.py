"""Independent eigenvalue oracle: Sturm-sequence bisection.

A Hermitian matrix is reduced to real symmetric tridiagonal form by
Householder reflections. For a tridiagonal matrix the leading principal
minors ``p_k(x) = det(T[:k, :k] - x I)`` satisfy a three-term recurrence,
and the number of sign changes in ``p_0, p_1, ..., p_n`` equals the number
of eigenvalues below ``x``. The ratio form ``q_k = p_k / p_{k-1}`` is used
so the count is the number of negative ``q_k``.

Shares no code with the Jacobi path.
"""
from __future__ import annotations

import numpy as np


def tridiagonalize(m):
    """Return ``(diag, offdiag)`` of a real symmetric tridiagonal matrix
    unitarily similar to Hermitian ``m``."""
    a = np.array(m, dtype=np.complex128, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * norm_x
        v /= np.linalg.norm(v)
        # two-sided reflection on the trailing block
        sub = a[k + 1:, :]
        a[k + 1:, :] = sub - 2.0 * np.outer(v, v.conj() @ sub)
        sub = a[:, k + 1:]
        a[:, k + 1:] = sub - 2.0 * np.outer(sub @ v, v.conj())
    diag = a.diagonal().real.copy()
    off = np.abs(np.diagonal(a, offset=1)).copy()
    return diag, off


def sturm_count(diag, off, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below ``x``."""
    count = 0
    q = 1.0
    tiny = 1e-300
    for i, d in enumerate(diag):
        e2 = off[i - 1] ** 2 if i > 0 else 0.0
        q = (d - x) - (e2 / q if i > 0 else 0.0)
        if q == 0.0:
            q = -tiny
        if q < 0.0:
            count += 1
    return count


def gershgorin_bounds(diag, off):
    radius = np.zeros_like(diag)
    radius[:-1] += off
    radius[1:] += off
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    pad = 1e-12 * max(1.0, abs(lo), abs(hi))
    return lo - pad, hi + pad


def bisection_eigenvalues(m, tol: float = 1e-14, max_iter: int = 200) -> np.ndarray:
    """All eigenvalues of Hermitian ``m``, ascending, by Sturm bisection."""
    diag, off = tridiagonalize(m)
    lo0, hi0 = gershgorin_bounds(diag, off)
    n = len(diag)
    out = np.empty(n)
    for k in range(n):
        # k-th smallest: smallest x with count(x) > k
        lo, hi = lo0, hi0
        for _ in range(max_iter):
            if hi - lo <= tol:
                break
            mid = 0.5 * (lo + hi)
            if sturm_count(diag, off, mid) > k:
                hi = mid
            else:
                lo = mid
        out[k] = 0.5 * (lo + hi)
    return out


def count_in_interval(m, lo: float, hi: float) -> int:
    """Eigenvalues of ``m`` in ``[lo, hi)`` by sign-change counting."""
    diag, off = tridiagonalize(m)
    return sturm_count(diag, off, hi) - sturm_count(diag, off, lo)


def oracle_negativity(m, threshold: float = 1e-12) -> float:
    """``2 * sum |lambda|`` over negative eigenvalues, from the bisection path."""
    ev = bisection_eigenvalues(m)
    return float(2.0 * np.sum(np.abs(ev[ev < -threshold])))
