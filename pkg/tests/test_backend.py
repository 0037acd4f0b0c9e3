import os
import subprocess
import sys

import numpy as np
import pytest

from fermitangle import _jacobi_py, hermitian

from conftest import random_hermitian


def _backend_with_env(value):
    env = dict(os.environ, FERMITANGLE_PURE=value)
    proc = subprocess.run(
        [sys.executable, "-c", "from fermitangle import hermitian; print(hermitian.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return proc.stdout.strip()


def test_env_forces_pure_fallback():
    assert _backend_with_env("1") == "python"


def test_default_prefers_extension():
    try:
        import fermitangle._jacobi  # noqa: F401
    except ImportError:
        pytest.skip("compiled kernel not built")
    assert _backend_with_env("0") == "cython"
    assert hermitian.BACKEND in ("cython", "python")


def test_kernels_identical_contract(kernel):
    m = random_hermitian(np.random.default_rng(12), 8)
    tol = 1e-13 * np.linalg.norm(m)
    diag, converged, sweeps = kernel.diagonalize(m, tol, 100)
    ref, _, _ = _jacobi_py.diagonalize(m, tol, 100)
    assert converged
    np.testing.assert_allclose(np.sort(diag), np.sort(ref), atol=1e-13)
    # input untouched
    assert np.allclose(m, m.conj().T)


def test_kernel_zero_sweeps_reports_unconverged(kernel):
    m = random_hermitian(np.random.default_rng(13), 4)
    _, converged, sweeps = kernel.diagonalize(m, 1e-13, 0)
    assert not converged and sweeps == 0


def test_subnormal_entries(kernel):
    m = np.array([[1e-323, 1, 1e-323], [1, 0, 0], [1e-323, 0, 0]], dtype=complex)
    diag, converged, _ = kernel.diagonalize(m, 1e-13 * np.linalg.norm(m), 100)
    assert converged
    np.testing.assert_allclose(np.sort(diag), [-1, 0, 1], atol=1e-15)
