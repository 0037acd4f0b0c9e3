"""Dense Hermitian eigenvalues, trace norm and negative-spectrum sums.

Matrices are plain square numpy arrays (real or complex). The eigensolver
is a cyclic Jacobi method; the compiled kernel is used when it imports,
otherwise the numpy fallback. Set ``FERMITANGLE_PURE=1`` to force the
fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian
from . import _jacobi_py

if os.environ.get("FERMITANGLE_PURE", "") not in ("", "0"):
    _kernel = _jacobi_py
else:
    try:
        from . import _jacobi as _kernel
    except ImportError:  # extension not built
        _kernel = _jacobi_py

BACKEND = "cython" if _kernel is not _jacobi_py else "python"

HERMITIAN_TOL = 1e-12
#: eigenvalues below ``-ZERO_THRESHOLD`` count as negative
ZERO_THRESHOLD = 1e-12
CONVERGENCE_RTOL = 1e-13
MAX_SWEEPS = 100
MAX_DIM = 2**12


@dataclass(frozen=True)
class EigenResult:
    """Spectrum of a Hermitian matrix, ascending."""

    eigenvalues: np.ndarray
    converged: bool
    iterations: int

    def __iter__(self):
        return iter(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)


def as_square_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {a.shape[0]} exceeds {MAX_DIM}")
    return a


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    a = as_square_matrix(m)
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def eigenvalues_hermitian(
    m,
    *,
    max_sweeps: int = MAX_SWEEPS,
    hermitian_tol: float = HERMITIAN_TOL,
    kernel=None,
) -> EigenResult:
    """All eigenvalues of a Hermitian matrix via cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm falls to
    ``1e-13 * ||m||_F`` or below.

    Raises
    ------
    NotHermitian
        If ``max |m - m^H| > hermitian_tol``.
    NoConvergence
        If ``max_sweeps`` full sweeps do not reach the tolerance.
    """
    a = as_square_matrix(m)
    if not is_hermitian(a, hermitian_tol):
        raise NotHermitian(
            f"matrix is not Hermitian (max asymmetry {np.max(np.abs(a - a.conj().T)):.3e})"
        )
    a = np.asarray(a, dtype=np.complex128)
    # symmetrize so the kernel sees an exactly Hermitian input
    a = 0.5 * (a + a.conj().T)
    tol = CONVERGENCE_RTOL * float(np.linalg.norm(a))
    diag, converged, sweeps = (kernel or _kernel).diagonalize(a, tol, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    return EigenResult(np.sort(diag), bool(converged), int(sweeps))


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(eigenvalues_hermitian(m).eigenvalues)))


def negative_eigenvalue_sum(m, threshold: float = ZERO_THRESHOLD) -> float:
    """Sum of ``|lambda|`` over eigenvalues ``lambda < -threshold``."""
    ev = eigenvalues_hermitian(m).eigenvalues
    return float(np.sum(np.abs(ev[ev < -threshold])))


def negativity(m, threshold: float = ZERO_THRESHOLD) -> float:
    """Twice the negative-spectrum sum, i.e. ``||m|| - 1`` for unit-trace ``m``."""
    return 2.0 * negative_eigenvalue_sum(m, threshold)
